"""Shared brute-force oracles and enumeration helpers.

The oracles here deliberately avoid the library's composite-element code
paths: generator actions are re-implemented letter by letter on raw exponent
maps, straight from the generator tables, so library results are checked
against an independent route.
"""

from __future__ import annotations

import itertools
from collections import deque

import pytest

from friezeinv import (
    ALPHABET_X,
    FriezeGroup,
    GroupElement,
    MonomialX,
    MonomialXY,
    identity,
    normal_form_x,
    normal_form_xy,
)
from friezeinv.groups import generator


# letter actions on exponent maps; uppercase letters are inverses
def _oracle_step(letter: str, xs: dict, ys: dict) -> tuple[dict, dict]:
    if letter == "t":
        return {i + 1: c for i, c in xs.items()}, {i + 1: c for i, c in ys.items()}
    if letter == "T":
        return {i - 1: c for i, c in xs.items()}, {i - 1: c for i, c in ys.items()}
    if letter == "g":
        return {i + 1: c for i, c in ys.items()}, {i + 1: c for i, c in xs.items()}
    if letter == "G":
        return {i - 1: c for i, c in ys.items()}, {i - 1: c for i, c in xs.items()}
    if letter == "v":
        return {-i: c for i, c in xs.items()}, {-i: c for i, c in ys.items()}
    if letter == "h":
        return dict(ys), dict(xs)
    if letter == "r":
        return {-i: c for i, c in ys.items()}, {-i: c for i, c in xs.items()}
    raise ValueError(letter)


def oracle_act_word(group: FriezeGroup, word: str, monomial) -> object:
    """Apply a generator word (leftmost letter acts last) via the letter table."""
    if group.alphabet == ALPHABET_X:
        xs, ys = monomial.exponents(), {}
    else:
        xs, ys = monomial.exponents()
    for letter in reversed(word):
        xs, ys = _oracle_step(letter, xs, ys)
    if group.alphabet == ALPHABET_X:
        assert not ys
        return normal_form_x(xs)
    return normal_form_xy(xs, ys)


def word_letters(group: FriezeGroup) -> tuple[str, ...]:
    """Generator letters plus shift inverse (involutions are self-inverse)."""
    shift_letter = group.shift_letter
    return (shift_letter, shift_letter.upper()) + tuple(sorted(group.flag_letters))


def element_of_letter(group: FriezeGroup, letter: str) -> GroupElement:
    if letter.isupper():
        return generator(group, letter.lower()).inverse()
    return generator(group, letter)


def ball_words(group: FriezeGroup, radius: int) -> dict[GroupElement, str]:
    """One shortest word per group element reachable with at most ``radius``
    generator letters (BFS on normal forms)."""
    start = identity(group)
    words = {start: ""}
    frontier = deque([(start, "")])
    while frontier:
        element, word = frontier.popleft()
        if len(word) == radius:
            continue
        for letter in word_letters(group):
            nxt = element_of_letter(group, letter) * element
            if nxt not in words:
                words[nxt] = letter + word
                frontier.append((nxt, letter + word))
    return words


def brute_orbit_in_window(group: FriezeGroup, monomial, window: int) -> set:
    """Orbit inside the window by exhausting flag words times bounded shifts."""
    span = monomial.span
    zmax = 2 * window + span + abs(getattr(monomial, "delta", 0)) + 2
    flag_words = {
        FriezeGroup.F1: [""],
        FriezeGroup.F2: [""],
        FriezeGroup.F3: ["", "v"],
        FriezeGroup.F4: ["", "r"],
        FriezeGroup.F5: ["", "v"],
        FriezeGroup.F6: ["", "h"],
        FriezeGroup.F7: ["", "v", "h", "vh"],
    }[group]
    shift_letter = group.shift_letter
    out = set()
    for flags in flag_words:
        for z in range(-zmax, zmax + 1):
            word = flags + (shift_letter * z if z >= 0 else shift_letter.upper() * -z)
            image = oracle_act_word(group, word, monomial)
            sup = image.support()
            if sup is None or (-window <= sup[0] and sup[1] <= window):
                out.add(image)
    return out


def monomials_x(max_degree: int, max_span: int, bases: range) -> list[MonomialX]:
    """All nonunit one-alphabet monomials with the given degree/span/base bounds."""
    out = set()
    for degree in range(1, max_degree + 1):
        for start in bases:
            slots = range(start, start + max_span)
            for combo in itertools.combinations_with_replacement(slots, degree):
                exps: dict[int, int] = {}
                for i in combo:
                    exps[i] = exps.get(i, 0) + 1
                out.add(normal_form_x(exps))
    return sorted(out, key=lambda m: m.sort_key())


def monomials_xy(max_degree: int, max_span: int, bases: range) -> list[MonomialXY]:
    """All nonunit two-alphabet monomials with the given degree/span/base bounds."""
    out = set()
    for degree in range(1, max_degree + 1):
        for start in bases:
            slots = [("x", i) for i in range(start, start + max_span)]
            slots += [("y", i) for i in range(start, start + max_span)]
            for combo in itertools.combinations_with_replacement(range(len(slots)), degree):
                xs: dict[int, int] = {}
                ys: dict[int, int] = {}
                for slot in combo:
                    letter, i = slots[slot]
                    target = xs if letter == "x" else ys
                    target[i] = target.get(i, 0) + 1
                out.add(normal_form_xy(xs, ys))
    return sorted(out, key=lambda m: m.sort_key())


def group_monomials(group: FriezeGroup, max_degree: int, max_span: int, bases: range):
    if group.alphabet == ALPHABET_X:
        return monomials_x(max_degree, max_span, bases)
    return monomials_xy(max_degree, max_span, bases)


ALL_GROUPS = tuple(FriezeGroup)


@pytest.fixture(params=ALL_GROUPS, ids=[g.value for g in ALL_GROUPS])
def any_group(request) -> FriezeGroup:
    return request.param
