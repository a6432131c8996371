"""The sign hyperoperation on {0, +, -, L} and sign images of hyper-sums.

A hyper-sum's sign image depends only on the two signs and on how the two
magnitudes compare, so three magnitude cases per sign pair decide
everything exactly.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import product

from .core import ZERO, Hyper, RationalLike, Sign, real_sign, to_rational
from .hyperadd import hyper_add

SignSet = frozenset  # frozenset[Sign]

Z, P, M, L = Sign.ZERO, Sign.PLUS, Sign.MINUS, Sign.LAMBDA
SIGNS = (Z, P, M, L)


def _build_sop_table() -> dict[tuple[Sign, Sign], frozenset[Sign]]:
    table = {}
    for s, t in product(SIGNS, repeat=2):
        if s is Z or t is Z:
            entry = {t if s is Z else s}
        elif s is L and t is L:
            entry = {Z, P, M, L}
        elif L in (s, t):
            entry = {L}
        elif s is t:
            entry = {s}
        else:
            entry = {P, Z, M}
        table[s, t] = frozenset(entry)
    return table


SOP_TABLE = _build_sop_table()

# Magnitude cases (a, b) visited in this order: equal, greater, smaller.
MAGNITUDE_CASES = ((Fraction(1), Fraction(1)), (Fraction(2), Fraction(1)), (Fraction(1), Fraction(2)))


def sop(s: Sign, t: Sign) -> frozenset[Sign]:
    return SOP_TABLE[s, t]


def sign_oplus(s: Sign, t: Sign) -> frozenset[Sign]:
    """Addition of the three-element sign hyperfield."""
    if L in (s, t):
        raise ValueError("the sign hyperfield has no L element")
    return SOP_TABLE[s, t]


def neg_sign(s: Sign) -> Sign:
    return {P: M, M: P}.get(s, s)


def sign_image(x: Hyper, y: Hyper) -> frozenset[Sign]:
    return hyper_add(x, y).signs()


def _witness_pairs(s: Sign, t: Sign):
    """Canonical representatives of every magnitude case for a sign pair."""
    if s is Z and t is Z:
        yield ZERO, ZERO
        return
    if s is Z or t is Z:
        yield (ZERO, Hyper(t, 1)) if s is Z else (Hyper(s, 1), ZERO)
        return
    for a, b in MAGNITUDE_CASES:
        yield Hyper(s, a), Hyper(t, b)


def witnesses(s: Sign, t: Sign) -> dict[Sign, tuple[Hyper, Hyper]]:
    """For each reachable sign, the first magnitude case that produces it."""
    book: dict[Sign, tuple[Hyper, Hyper]] = {}
    for x, y in _witness_pairs(s, t):
        for rho in sorted(sign_image(x, y)):
            book.setdefault(rho, (x, y))
    return dict(sorted(book.items()))


def reachable(s: Sign, t: Sign) -> frozenset[Sign]:
    """Signs occurring in ``x ⊞ y`` over all ``x``, ``y`` with signs ``s``, ``t``."""
    return frozenset(witnesses(s, t))


WITNESS_BOOK: dict[tuple[Sign, Sign, Sign], tuple[Hyper, Hyper]] = {
    (s, t, rho): pair
    for s, t in product(SIGNS, repeat=2)
    for rho, pair in witnesses(s, t).items()
}


def envelope_check(x: Hyper, y: Hyper) -> bool:
    return sign_image(x, y) <= sop(x.sign, y.sign)


def real_sign_sum_check(r: RationalLike, s: RationalLike) -> bool:
    r, s = to_rational(r), to_rational(s)
    return real_sign(r + s) in sign_oplus(real_sign(r), real_sign(s))
