"""Group actions on monomials, orbits inside a window, and stabilizers.

The generator actions on variable indices are:

    t: x_i -> x_{i+1}, y_i -> y_{i+1}        (F1, F3, F4, F6, F7)
    g: x_i -> y_{i+1}, y_i -> x_{i+1}        (F2, F5)
    v: x_i -> x_{-i},  y_i -> y_{-i}         (F3, F5, F7)
    h: x_i -> y_i,     y_i -> x_i            (F6, F7)
    r: x_i -> y_{-i},  y_i -> x_{-i}         (F4)

An element in normal form v^a h^b t^z acts as the composite v^a o h^b o t^z
(shift first).  Powers of g shift every index by z and swap the alphabets
when z is odd.
"""

from __future__ import annotations

from functools import lru_cache

from .groups import FriezeGroup, GroupElement, identity, shift
from .monomials import (
    ALPHABET_X,
    Monomial,
    MonomialX,
    MonomialXY,
    normal_form_x,
    normal_form_xy,
)


def _shifted(exps: dict[int, int], z: int) -> dict[int, int]:
    return {i + z: c for i, c in exps.items()} if z else exps


def _negated(exps: dict[int, int]) -> dict[int, int]:
    return {-i: c for i, c in exps.items()}


def act_x(element: GroupElement, monomial: MonomialX) -> MonomialX:
    """Image of a one-alphabet monomial under an element of F1 or F3."""
    if element.group not in (FriezeGroup.F1, FriezeGroup.F3):
        raise ValueError(f"{element.group} does not act on the one-alphabet ring")
    if not isinstance(monomial, MonomialX):
        raise TypeError("act_x expects a one-alphabet monomial")
    xs = _shifted(monomial.exponents(), element.power)
    if element.v:
        xs = _negated(xs)
    return normal_form_x(xs)


def act_xy(element: GroupElement, monomial: MonomialXY) -> MonomialXY:
    """Image of a two-alphabet monomial under an element of F2, F4, F5, F6 or F7."""
    if element.group in (FriezeGroup.F1, FriezeGroup.F3):
        raise ValueError(f"{element.group} does not act on the two-alphabet ring")
    if not isinstance(monomial, MonomialXY):
        raise TypeError("act_xy expects a two-alphabet monomial")
    xs, ys = monomial.exponents()
    z = element.power
    if element.group.uses_glide and z % 2:
        xs, ys = _shifted(ys, z), _shifted(xs, z)
    else:
        xs, ys = _shifted(xs, z), _shifted(ys, z)
    if element.h:
        xs, ys = ys, xs
    if element.v:
        xs, ys = _negated(xs), _negated(ys)
    if element.r:
        xs, ys = _negated(ys), _negated(xs)
    return normal_form_xy(xs, ys)


def act(element: GroupElement, monomial: Monomial) -> Monomial:
    """Dispatch to act_x or act_xy according to the element's group."""
    if element.group.alphabet == ALPHABET_X:
        return act_x(element, monomial)
    return act_xy(element, monomial)


@lru_cache(maxsize=None)
def orbit_coset_representatives(group: FriezeGroup) -> tuple[GroupElement, ...]:
    """Coset representatives of the cyclic shift subgroup; the orbit of a
    monomial is the union of the shift-orbits of their images."""
    e = identity(group)
    if group in (FriezeGroup.F1, FriezeGroup.F2):
        return (e,)
    if group in (FriezeGroup.F3, FriezeGroup.F5):
        return (e, GroupElement(group, v=True))
    if group is FriezeGroup.F4:
        return (e, GroupElement(group, r=True))
    if group is FriezeGroup.F6:
        return (e, GroupElement(group, h=True))
    return (
        e,
        GroupElement(group, v=True),
        GroupElement(group, h=True),
        GroupElement(group, v=True, h=True),
    )


@lru_cache(maxsize=None)
def translation_coset_representatives(group: FriezeGroup) -> tuple[GroupElement, ...]:
    """Coset representatives of the translation subgroup (t, or g^2 for the
    glide groups).  For the glide groups this additionally splits each shift
    coset by the parity of the glide power."""
    reps = orbit_coset_representatives(group)
    if not group.uses_glide:
        return reps
    return tuple(rep * shift(group, parity) for rep in reps for parity in (0, 1))


def orbit_in_window(group: FriezeGroup, monomial: Monomial, window: int) -> set[Monomial]:
    """All images of the monomial whose support lies entirely in [-window, window]."""
    if window < 0:
        raise ValueError("window must be non-negative")
    if monomial.is_unit:
        return {monomial}
    out: set[Monomial] = set()
    for rep in orbit_coset_representatives(group):
        image = act(rep, monomial)
        lo, hi = image.support()
        # shifting by z moves the support to [lo+z, hi+z]
        for z in range(-window - lo, window - hi + 1):
            out.add(act(shift(group, z), image))
    return out


def stabilizer(group: FriezeGroup, monomial: Monomial) -> tuple[GroupElement, ...]:
    """The non-identity elements fixing the monomial, in closed form.

    Each nontrivial fixing element is an involution-type flag word combined
    with one explicit shift power, and there is at most one such element per
    coset of the shift subgroup, so the tuple has at most three entries (only
    F7 can reach three).  Empty tuple == trivial stabilizer.
    """
    if monomial.is_unit:
        raise ValueError("stabilizer is only defined for nonunit monomials")
    if group in (FriezeGroup.F1, FriezeGroup.F2):
        return ()
    if group is FriezeGroup.F3:
        if not isinstance(monomial, MonomialX):
            raise TypeError("F3 acts on one-alphabet monomials")
        if monomial.shape.is_palindrome:
            power = -2 * monomial.base - monomial.shape.num_parts - 1
            return (GroupElement(group, v=True, power=power),)
        return ()
    if not isinstance(monomial, MonomialXY):
        raise TypeError(f"{group} acts on two-alphabet monomials")

    base, sx, sy, delta = monomial.base, monomial.shape_x, monomial.shape_y, monomial.delta
    m, mp = sx.num_parts, sy.num_parts
    pure = sx.is_empty or sy.is_empty
    # width of the block anchored at base+1 (the x block unless it is empty)
    anchor = mp if sx.is_empty else m

    # reflection type: both shapes palindromic and the y offset self-consistent
    v_fixes = (
        sx.is_palindrome and sy.is_palindrome and (pure or 2 * delta == m - mp)
    )
    v_power = -2 * base - anchor - 1
    # rotation type: alphabets swap, so it needs both blocks and mirrored shapes
    r_fixes = not pure and sx.parts == sy.reverse().parts
    r_power = -2 * base - delta - m - 1
    # horizontal type: alphabets swap in place
    h_fixes = sx == sy and delta == 0

    found: list[GroupElement] = []
    if group is FriezeGroup.F4:
        if r_fixes:
            found.append(GroupElement(group, r=True, power=r_power))
    elif group is FriezeGroup.F5:
        # v combined with an even glide power is a pure reflection, with an
        # odd glide power a rotation; the witness parity decides which exists
        if v_fixes and v_power % 2 == 0:
            found.append(GroupElement(group, v=True, power=v_power))
        if r_fixes and r_power % 2 == 1:
            found.append(GroupElement(group, v=True, power=r_power))
    elif group is FriezeGroup.F6:
        if h_fixes:
            found.append(GroupElement(group, h=True))
    elif group is FriezeGroup.F7:
        if v_fixes:
            found.append(GroupElement(group, v=True, power=v_power))
        if h_fixes:
            found.append(GroupElement(group, h=True))
        if r_fixes:
            found.append(GroupElement(group, v=True, h=True, power=r_power))
    else:  # pragma: no cover
        raise ValueError(f"unhandled group {group}")
    found.sort(key=GroupElement.sort_key)
    return tuple(found)
