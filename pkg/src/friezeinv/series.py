"""Window-truncated homogeneous formal series with exact rational coefficients.

A TruncatedSeries is the restriction of a degree-homogeneous formal infinite
linear combination to the monomials supported in [-window, window].  All
coefficients are exact Fractions; zero coefficients are never stored, so
series equality is plain map equality.  Truncation makes literal invariance
false near the boundary, which is why the invariance test takes an explicit
interior margin.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Union

from .actions import act
from .groups import FriezeGroup, generators
from .monomials import (
    ALPHABET_X,
    ALPHABET_XY,
    Monomial,
    MonomialX,
    MonomialXY,
    UNIT_X,
    normal_form_x,
    normal_form_xy,
    parse_monomial,
)

Scalar = Union[int, str, Fraction]


def as_fraction(value: Scalar) -> Fraction:
    if isinstance(value, float):
        raise TypeError("floating-point coefficients are not allowed; use Fraction or str")
    return Fraction(value)


class TruncatedSeries:
    """Immutable sparse map monomial -> Fraction at a fixed degree and window."""

    __slots__ = ("alphabet", "degree", "window", "_coeffs")

    def __init__(
        self,
        alphabet: str,
        degree: int,
        window: int,
        coeffs: Mapping[Monomial, Scalar] | Iterable[tuple[Monomial, Scalar]] = (),
    ) -> None:
        if alphabet not in (ALPHABET_X, ALPHABET_XY):
            raise ValueError(f"unknown alphabet {alphabet!r}")
        if degree < 0:
            raise ValueError("degree must be non-negative")
        if window < 0:
            raise ValueError("window must be non-negative")
        object.__setattr__(self, "alphabet", alphabet)
        object.__setattr__(self, "degree", degree)
        object.__setattr__(self, "window", window)
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        expected = MonomialX if alphabet == ALPHABET_X else MonomialXY
        store: dict[Monomial, Fraction] = {}
        for monomial, value in items:
            if not isinstance(monomial, expected):
                raise TypeError(f"expected {expected.__name__} keys for alphabet {alphabet}")
            if monomial.degree != degree:
                raise ValueError(
                    f"monomial {monomial} has degree {monomial.degree}, series has degree {degree}"
                )
            sup = monomial.support()
            if sup is not None and (sup[0] < -window or sup[1] > window):
                raise ValueError(f"monomial {monomial} is not supported in [-{window}, {window}]")
            coeff = store.get(monomial, Fraction(0)) + as_fraction(value)
            if coeff:
                store[monomial] = coeff
            else:
                store.pop(monomial, None)
        object.__setattr__(self, "_coeffs", store)

    def __setattr__(self, name, value):  # noqa: ANN001
        raise AttributeError("TruncatedSeries is immutable")

    @classmethod
    def zero(cls, alphabet: str, degree: int, window: int) -> "TruncatedSeries":
        return cls(alphabet, degree, window)

    def coefficient(self, monomial: Monomial) -> Fraction:
        return self._coeffs.get(monomial, Fraction(0))

    def monomials(self) -> set[Monomial]:
        return set(self._coeffs)

    def terms(self) -> list[tuple[Monomial, Fraction]]:
        """Terms in deterministic order (by base, then shapes, then offset)."""
        return sorted(self._coeffs.items(), key=lambda item: item[0].sort_key())

    @property
    def num_terms(self) -> int:
        return len(self._coeffs)

    def is_zero(self) -> bool:
        return not self._coeffs

    def _check_compatible(self, other: "TruncatedSeries", same_degree: bool = True) -> None:
        if self.alphabet != other.alphabet:
            raise ValueError("alphabet mismatch")
        if self.window != other.window:
            raise ValueError("window mismatch")
        if same_degree and self.degree != other.degree:
            raise ValueError("degree mismatch")

    def add(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check_compatible(other)
        out = dict(self._coeffs)
        for monomial, coeff in other._coeffs.items():
            total = out.get(monomial, Fraction(0)) + coeff
            if total:
                out[monomial] = total
            else:
                out.pop(monomial, None)
        return TruncatedSeries(self.alphabet, self.degree, self.window, out)

    def scale(self, value: Scalar) -> "TruncatedSeries":
        factor = as_fraction(value)
        if not factor:
            return TruncatedSeries.zero(self.alphabet, self.degree, self.window)
        return TruncatedSeries(
            self.alphabet,
            self.degree,
            self.window,
            {monomial: coeff * factor for monomial, coeff in self._coeffs.items()},
        )

    def multiply(self, other: "TruncatedSeries") -> "TruncatedSeries":
        """Ring product; the degree adds and the window stays the same.

        Products of window-supported monomials are window-supported, so no
        truncation loss happens here (loss only enters via the factors).
        """
        self._check_compatible(other, same_degree=False)
        out: dict[Monomial, Fraction] = {}
        for ma, ca in self._coeffs.items():
            for mb, cb in other._coeffs.items():
                key = _merge(ma, mb)
                total = out.get(key, Fraction(0)) + ca * cb
                if total:
                    out[key] = total
                else:
                    out.pop(key, None)
        return TruncatedSeries(self.alphabet, self.degree + other.degree, self.window, out)

    def project(self, window: int) -> "TruncatedSeries":
        """Restrict to a smaller window, dropping the monomials that escape it."""
        if window < 0:
            raise ValueError("window must be non-negative")
        if window > self.window:
            raise ValueError(f"cannot project from window {self.window} up to {window}")
        kept = {}
        for monomial, coeff in self._coeffs.items():
            sup = monomial.support()
            if sup is None or (-window <= sup[0] and sup[1] <= window):
                kept[monomial] = coeff
        return TruncatedSeries(self.alphabet, self.degree, window, kept)

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return self.add(other)

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return self.add(other.scale(-1))

    def __mul__(self, other):  # noqa: ANN001
        if isinstance(other, TruncatedSeries):
            return self.multiply(other)
        return self.scale(other)

    def __rmul__(self, other):  # noqa: ANN001
        return self.scale(other)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return (
            self.alphabet == other.alphabet
            and self.degree == other.degree
            and self.window == other.window
            and self._coeffs == other._coeffs
        )

    def __repr__(self) -> str:
        terms = " + ".join(f"{coeff}*{monomial}" for monomial, coeff in self.terms()[:6])
        if self.num_terms > 6:
            terms += " + ..."
        return (
            f"TruncatedSeries({self.alphabet}, degree={self.degree}, "
            f"window={self.window}, {terms or '0'})"
        )

    def to_json_dict(self) -> dict:
        return {
            "alphabet": self.alphabet,
            "degree": self.degree,
            "window": self.window,
            "terms": [
                {"monomial": str(monomial), "coeff": str(coeff)}
                for monomial, coeff in self.terms()
            ],
        }

    @classmethod
    def from_json_dict(cls, data: Mapping) -> "TruncatedSeries":
        try:
            alphabet = data["alphabet"]
            degree = int(data["degree"])
            window = int(data["window"])
            raw_terms = data["terms"]
        except (KeyError, TypeError, ValueError) as exc:
            raise ValueError(f"malformed series object: {exc}") from exc
        terms = []
        for entry in raw_terms:
            monomial = parse_monomial(entry["monomial"], alphabet)
            terms.append((monomial, as_fraction(entry["coeff"])))
        return cls(alphabet, degree, window, terms)


def _merge(a: Monomial, b: Monomial) -> Monomial:
    if isinstance(a, MonomialX):
        xs = a.exponents()
        for i, c in b.exponents().items():
            xs[i] = xs.get(i, 0) + c
        return normal_form_x(xs)
    xa, ya = a.exponents()
    xb, yb = b.exponents()
    for i, c in xb.items():
        xa[i] = xa.get(i, 0) + c
    for i, c in yb.items():
        ya[i] = ya.get(i, 0) + c
    return normal_form_xy(xa, ya)


def act_series(element, series: TruncatedSeries) -> TruncatedSeries:
    """Relabel every monomial by the group action, dropping images that leave
    the window; linear in the series."""
    if element.group.alphabet != series.alphabet:
        raise ValueError(f"{element.group} does not act on alphabet {series.alphabet}")
    out: dict[Monomial, Fraction] = {}
    window = series.window
    for monomial, coeff in series._coeffs.items():
        image = act(element, monomial)
        sup = image.support()
        if sup is not None and (sup[0] < -window or sup[1] > window):
            continue
        total = out.get(image, Fraction(0)) + coeff
        if total:
            out[image] = total
        else:
            out.pop(image, None)
    return TruncatedSeries(series.alphabet, series.degree, window, out)


def _interior(monomial: Monomial, lo: int, hi: int) -> bool:
    sup = monomial.support()
    return sup is None or (lo <= sup[0] and sup[1] <= hi)


def is_invariant(group: FriezeGroup, series: TruncatedSeries, margin: int) -> bool:
    """Coefficient constancy on orbits, tested away from the window boundary.

    For every generator and every monomial supported in
    [-window+margin, window-margin], the coefficient must match the one of its
    preimage.  margin >= 1 is required so preimages of interior monomials stay
    inside the window (the shift generators move indices by one; reflections
    preserve the symmetric interior).
    """
    if margin < 1:
        raise ValueError("margin must be at least 1")
    if group.alphabet != series.alphabet:
        raise ValueError(f"{group} does not act on alphabet {series.alphabet}")
    lo, hi = -series.window + margin, series.window - margin
    for gen in generators(group):
        inv = gen.inverse()
        candidates = set()
        for monomial in series._coeffs:
            if _interior(monomial, lo, hi):
                candidates.add(monomial)
            image = act(gen, monomial)
            if _interior(image, lo, hi):
                candidates.add(image)
        for monomial in candidates:
            if series.coefficient(act(inv, monomial)) != series.coefficient(monomial):
                return False
    return True


def elementary_sym(r: int, window: int) -> TruncatedSeries:
    """Sum of all products of r distinct variables inside the window."""
    from itertools import combinations

    if r < 0:
        raise ValueError("r must be non-negative")
    if r == 0:
        return TruncatedSeries(ALPHABET_X, 0, window, {UNIT_X: 1})
    terms = {}
    for indices in combinations(range(-window, window + 1), r):
        terms[normal_form_x({i: 1 for i in indices})] = 1
    return TruncatedSeries(ALPHABET_X, r, window, terms)


def complete_sym(r: int, window: int) -> TruncatedSeries:
    """Sum of all monomials of total degree r inside the window."""
    from itertools import combinations_with_replacement

    if r < 0:
        raise ValueError("r must be non-negative")
    if r == 0:
        return TruncatedSeries(ALPHABET_X, 0, window, {UNIT_X: 1})
    terms = {}
    for indices in combinations_with_replacement(range(-window, window + 1), r):
        exps: dict[int, int] = {}
        for i in indices:
            exps[i] = exps.get(i, 0) + 1
        terms[normal_form_x(exps)] = 1
    return TruncatedSeries(ALPHABET_X, r, window, terms)
