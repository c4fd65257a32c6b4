"""Canonical labels for the orbit-sum invariant functions and their expansions.

Every nonunit monomial lies in exactly one group orbit, and each orbit gives
one invariant function: the formal sum of the orbit's distinct monomials with
coefficient 1.  A BasisIndex is the canonical name of such an orbit: shapes,
y-offset and (for the two glide groups) a parity class telling whether the
representative's base index is even (unprimed) or odd (primed).

Several raw labels can name the same orbit (reversal for F3, shape swaps with
an offset adjustment for F4/F6/F7, the parity-coupled swap families for
F2/F5).  Canonicalization acts by every translation-coset representative,
reads off the label of each image and keeps the lexicographically least
tuple (parityClass, shapeX, shapeY, delta); this generates the full
equivalence class without case analysis.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .actions import act, orbit_in_window, translation_coset_representatives
from .compositions import EMPTY, Composition, compositions_of, parse_composition
from .errors import ParseError
from .groups import FriezeGroup
from .monomials import ALPHABET_X, Monomial, MonomialX, MonomialXY
from .series import TruncatedSeries, is_invariant


@dataclass(frozen=True, slots=True)
class BasisIndex:
    group: FriezeGroup
    shape_x: Composition
    shape_y: Composition = EMPTY
    delta: int = 0
    primed: bool = False

    def __post_init__(self) -> None:
        if self.degree < 1:
            raise ValueError("basis labels require total order >= 1")
        if self.group.alphabet == ALPHABET_X:
            if not self.shape_y.is_empty or self.delta != 0 or self.primed:
                raise ValueError(f"{self.group} labels carry a single shape")
        else:
            if (self.shape_x.order == 0 or self.shape_y.order == 0) and self.delta != 0:
                raise ValueError("delta must be 0 when either shape has order 0")
            if self.primed and not self.group.uses_glide:
                raise ValueError(f"{self.group} labels have no parity class")

    @property
    def degree(self) -> int:
        return self.shape_x.order + self.shape_y.order

    def sort_key(self) -> tuple:
        return (self.primed, self.shape_x.parts, self.shape_y.parts, self.delta)

    def __str__(self) -> str:
        return format_basis_label(self)


def make_index(
    group: FriezeGroup,
    shape_x: Composition,
    shape_y: Composition = EMPTY,
    delta: int = 0,
    primed: bool = False,
) -> BasisIndex:
    """Build a (possibly non-canonical) label, normalizing the degenerate
    offset: when either shape has order 0 all offsets name the same function,
    so delta collapses to 0."""
    if group.alphabet == ALPHABET_X:
        return BasisIndex(group, shape_x)
    if shape_x.order == 0 or shape_y.order == 0:
        delta = 0
    return BasisIndex(group, shape_x, shape_y, delta, primed)


def representative_monomial(index: BasisIndex) -> Monomial:
    """The orbit member the label abbreviates: base 0, or base -1 when primed."""
    if index.group.alphabet == ALPHABET_X:
        return MonomialX(0, index.shape_x)
    return MonomialXY(-1 if index.primed else 0, index.shape_x, index.shape_y, index.delta)


def index_of_monomial(group: FriezeGroup, monomial: Monomial) -> BasisIndex:
    """The unique basis label whose orbit contains the monomial."""
    if monomial.is_unit:
        raise ValueError("the unit monomial has no basis label")
    best: BasisIndex | None = None
    for rep in translation_coset_representatives(group):
        image = act(rep, monomial)
        if isinstance(image, MonomialX):
            candidate = BasisIndex(group, image.shape)
        elif group.uses_glide:
            candidate = BasisIndex(
                group,
                image.shape_x,
                image.shape_y,
                image.delta,
                primed=image.base % 2 == 1,
            )
        else:
            candidate = BasisIndex(group, image.shape_x, image.shape_y, image.delta)
        if best is None or candidate.sort_key() < best.sort_key():
            best = candidate
    assert best is not None
    return best


def canonical_index(
    group: FriezeGroup,
    shape_x: Composition,
    shape_y: Composition = EMPTY,
    delta: int = 0,
    primed: bool = False,
) -> BasisIndex:
    """Canonical representative of the label's equivalence class."""
    raw = make_index(group, shape_x, shape_y, delta, primed)
    return index_of_monomial(group, representative_monomial(raw))


def enumerate_indices(
    group: FriezeGroup,
    degree: int,
    max_parts: int,
    max_abs_delta: int = 0,
) -> list[BasisIndex]:
    """All canonical labels of the given degree whose shapes have at most
    ``max_parts`` parts and whose offset satisfies |delta| <= max_abs_delta,
    deduplicated and in deterministic order."""
    if degree < 1:
        raise ValueError("degree must be at least 1")
    if max_parts < 1:
        raise ValueError("max_parts must be at least 1")
    found: set[BasisIndex] = set()

    def within_bounds(idx: BasisIndex) -> bool:
        return (
            idx.shape_x.num_parts <= max_parts
            and idx.shape_y.num_parts <= max_parts
            and abs(idx.delta) <= max_abs_delta
        )

    if group.alphabet == ALPHABET_X:
        for shape in compositions_of(degree, max_parts):
            found.add(canonical_index(group, shape))
        return sorted(found, key=BasisIndex.sort_key)

    parities = (False, True) if group.uses_glide else (False,)
    for order_x in range(degree + 1):
        for shape_x in compositions_of(order_x, max_parts):
            for shape_y in compositions_of(degree - order_x, max_parts):
                degenerate = order_x == 0 or order_x == degree
                deltas = (0,) if degenerate else range(-max_abs_delta, max_abs_delta + 1)
                for delta in deltas:
                    for primed in parities:
                        idx = canonical_index(group, shape_x, shape_y, delta, primed)
                        if within_bounds(idx):
                            found.add(idx)
    return sorted(found, key=BasisIndex.sort_key)


def expand_basis_function(index: BasisIndex, window: int) -> TruncatedSeries:
    """Orbit sum of the label's representative, truncated to the window.

    Every distinct orbit member supported in [-window, window] appears once
    with coefficient 1 (stabilized monomials are not repeated).
    """
    rep = representative_monomial(index)
    sup = rep.support()
    if sup is not None and (sup[0] < -window or sup[1] > window):
        raise ValueError(
            f"window {window} is too small for the representative monomial {rep}"
        )
    orbit = orbit_in_window(index.group, rep, window)
    return TruncatedSeries(
        index.group.alphabet, index.degree, window, {monomial: 1 for monomial in orbit}
    )


def expand_in_basis(
    group: FriezeGroup, series: TruncatedSeries, margin: int
) -> dict[BasisIndex, Fraction]:
    """Coefficients of an invariant series on the orbit-sum basis.

    Coefficients are read off canonical representatives rather than solved
    for; an index is reported when its representative monomial is supported
    in the interior window [-window+margin, window-margin].  The result is
    checked two ways: interior coefficients must be constant on each orbit,
    and the reported combination must reconstruct the series on the interior
    supports of the reported orbits.  Non-invariant input is rejected.
    """
    if series.degree < 1:
        raise ValueError("degree-0 series have no orbit-sum expansion")
    if not is_invariant(group, series, margin):
        raise ValueError("series is not invariant on the interior window")
    lo, hi = -series.window + margin, series.window - margin

    def interior(monomial: Monomial) -> bool:
        sup = monomial.support()
        return sup is None or (lo <= sup[0] and sup[1] <= hi)

    by_index: dict[BasisIndex, list[Monomial]] = {}
    for monomial in series.monomials():
        if interior(monomial):
            by_index.setdefault(index_of_monomial(group, monomial), []).append(monomial)

    out: dict[BasisIndex, Fraction] = {}
    for index, members in by_index.items():
        values = {series.coefficient(m) for m in members}
        if len(values) != 1:
            raise ValueError(f"coefficients are not constant on the orbit of {index}")
        if not interior(representative_monomial(index)):
            continue
        out[index] = values.pop()

    # reconstruction check over the reported orbits
    for index, coeff in out.items():
        for monomial in expand_basis_function(index, series.window).monomials():
            if interior(monomial) and series.coefficient(monomial) != coeff:
                raise ValueError(f"reconstruction mismatch at {monomial} for {index}")
    return out


_LABEL_RE = re.compile(r"f([1-7])(')?\[(.*)\]\s*$")


def format_basis_label(index: BasisIndex) -> str:
    name = f"f{index.group.value[1]}" + ("'" if index.primed else "")
    if index.group.alphabet == ALPHABET_X:
        return f"{name}[{index.shape_x}]"
    return f"{name}[{index.shape_x},{index.shape_y};Δ={index.delta}]"


def parse_basis_label(text: str) -> BasisIndex:
    """Parse a label such as ``f6[(1),(2);Δ=-3]`` or ``f2'[(1),(1);Δ=0]``.

    ``delta=`` is accepted as an ASCII alternative to ``Δ=``.  The returned
    label is validated but not canonicalized.
    """
    match = _LABEL_RE.match(text.strip())
    if match is None:
        raise ParseError(f"bad basis label {text!r}", 0)
    digit, prime, body = match.groups()
    group = FriezeGroup(f"F{digit}")
    if group.alphabet == ALPHABET_X:
        if prime:
            raise ParseError(f"{group} labels have no parity class", 0)
        return make_index(group, parse_composition(body))
    if prime and not group.uses_glide:
        raise ParseError(f"{group} labels have no parity class", 0)
    shapes, sep, delta_text = body.partition(";")
    first, comma, second = shapes.partition("),(")
    if not sep or not comma:
        raise ParseError(f"two shapes and an offset are required in {text!r}", 0)
    shape_x = parse_composition(first + ")")
    shape_y = parse_composition("(" + second)
    delta_text = delta_text.strip()
    for prefix in ("Δ=", "delta="):
        if delta_text.startswith(prefix):
            delta_text = delta_text[len(prefix):]
            break
    else:
        raise ParseError(f"offset must be written Δ=<int> in {text!r}", 0)
    if not delta_text.lstrip("-").isdigit():
        raise ParseError(f"bad offset value {delta_text!r}", 0)
    try:
        return make_index(group, shape_x, shape_y, int(delta_text), primed=bool(prime))
    except ValueError as exc:
        raise ParseError(str(exc), 0) from exc
