"""Sign monoid, multiplication, units and the rational scalar action."""
from __future__ import annotations

import enum

from .core import NONZERO_SIGNS, ZERO, Hyper, HyperSet, RationalLike, Sign, embed_real, to_rational

ONE = Hyper(Sign.PLUS, 1)


class NotAUnit(enum.Enum):
    """Outcome of :func:`mul_inverse` for ``ZERO`` and the Lambda sector."""

    NOT_A_UNIT = "not a unit"

    def __repr__(self) -> str:
        return "NOT_A_UNIT"


NOT_A_UNIT = NotAUnit.NOT_A_UNIT

# (+) is the identity, (-)(-) = (+), anything times L is L.
SIGN_MONOID_TABLE: dict[tuple[Sign, Sign], Sign] = {
    (Sign.PLUS, Sign.PLUS): Sign.PLUS,
    (Sign.PLUS, Sign.MINUS): Sign.MINUS,
    (Sign.PLUS, Sign.LAMBDA): Sign.LAMBDA,
    (Sign.MINUS, Sign.PLUS): Sign.MINUS,
    (Sign.MINUS, Sign.MINUS): Sign.PLUS,
    (Sign.MINUS, Sign.LAMBDA): Sign.LAMBDA,
    (Sign.LAMBDA, Sign.PLUS): Sign.LAMBDA,
    (Sign.LAMBDA, Sign.MINUS): Sign.LAMBDA,
    (Sign.LAMBDA, Sign.LAMBDA): Sign.LAMBDA,
}


def sign_mul(s: Sign, t: Sign) -> Sign:
    """Product in the three-element sign monoid; ``ZERO`` is not allowed."""
    if s is Sign.ZERO or t is Sign.ZERO:
        raise ValueError("sign_mul is defined on {+, -, L}; use sign_mul_ext for 0")
    return SIGN_MONOID_TABLE[s, t]


def sign_mul_ext(s: Sign, t: Sign) -> Sign:
    """Sign product with ``ZERO`` adjoined as an absorbing element."""
    if s is Sign.ZERO or t is Sign.ZERO:
        return Sign.ZERO
    return SIGN_MONOID_TABLE[s, t]


def mul(x: Hyper, y: Hyper) -> Hyper:
    if x.is_zero or y.is_zero:
        return ZERO
    return Hyper(SIGN_MONOID_TABLE[x.sign, y.sign], x.mag * y.mag)


def mul_inverse(x: Hyper) -> Hyper | NotAUnit:
    if x.is_zero or x.sign is Sign.LAMBDA:
        return NOT_A_UNIT
    return Hyper(x.sign, 1 / x.mag)


def is_unit(x: Hyper) -> bool:
    return mul_inverse(x) is not NOT_A_UNIT


def idempotents() -> HyperSet:
    # e*e = e forces magnitude 1 and a sign fixed by squaring
    return HyperSet([ZERO] + [Hyper(s, 1) for s in NONZERO_SIGNS if SIGN_MONOID_TABLE[s, s] is s])


def scalar_mul(t: RationalLike, x: Hyper) -> Hyper:
    """Action of a rational scalar through the real embedding."""
    return mul(embed_real(to_rational(t)), x)


def mul_sets(A: HyperSet, B: HyperSet) -> HyperSet:
    return HyperSet(mul(a, b) for a in A for b in B)


def scalar_mul_set(t: RationalLike, A: HyperSet) -> HyperSet:
    return HyperSet(scalar_mul(t, a) for a in A)
