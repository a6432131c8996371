"""Cancellation mass and the associative ambient monoid ``Q x Q>=0``.

An ambient element ``(x, c)`` carries a real shadow ``x`` and the absolute
value ``c`` lost to cancellation so far.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .assoc import assoc_at, pml_triple
from .core import ZERO, Hyper, RationalLike, Sign, to_rational


def c_mass(r1: RationalLike, r2: RationalLike) -> Fraction:
    """``|r1| + |r2| - |r1 + r2|``."""
    r1, r2 = to_rational(r1), to_rational(r2)
    return abs(r1) + abs(r2) - abs(r1 + r2)


@dataclass(frozen=True)
class AmbientElem:
    shadow: Fraction
    mass: Fraction = Fraction(0)

    def __post_init__(self) -> None:
        object.__setattr__(self, "shadow", to_rational(self.shadow))
        object.__setattr__(self, "mass", to_rational(self.mass))
        if self.mass < 0:
            raise ValueError("cancellation mass must be nonnegative")

    def __add__(self, other: "AmbientElem") -> "AmbientElem":
        return amb_add(self, other)

    def __str__(self) -> str:
        return f"({self.shadow}, {self.mass})"


AMBIENT_ZERO = AmbientElem(Fraction(0), Fraction(0))


def amb_add(u: AmbientElem, v: AmbientElem) -> AmbientElem:
    return AmbientElem(u.shadow + v.shadow, u.mass + v.mass + c_mass(u.shadow, v.shadow))


def pi(u: AmbientElem) -> Fraction:
    return u.shadow


def iota(h: Hyper) -> AmbientElem:
    if h.is_zero:
        return AMBIENT_ZERO
    if h.sign is Sign.PLUS:
        return AmbientElem(h.mag, 0)
    if h.sign is Sign.MINUS:
        return AmbientElem(-h.mag, 0)
    return AmbientElem(0, h.mag)


def p_lambda(u: AmbientElem) -> Hyper:
    if u.shadow == 0 and u.mass == 0:
        return ZERO
    return Hyper(Sign.LAMBDA, abs(u.shadow) + u.mass)


@dataclass(frozen=True)
class AmbientTrace:
    U: AmbientElem
    left_read: Hyper
    right_read: Hyper
    defect: Fraction


def ambient_trace(a: RationalLike, b: RationalLike, c: RationalLike) -> AmbientTrace:
    """Ambient reading of both bracketings of ``((+, a), (-, b), (L, c))``.

    ``right_read`` decodes the full ambient sum; ``left_read`` decodes
    ``(a - b, c)``, the state in which the cancellation mass of ``a`` against
    ``-b`` has been discarded.
    """
    x, y, z = pml_triple(a, b, c)
    U = iota(x) + iota(y) + iota(z)
    right_read = p_lambda(U)
    left_read = p_lambda(AmbientElem(x.mag - y.mag, z.mag))
    gap = right_read.mag - left_read.mag

    report = assoc_at(x, y, z)
    if right_read not in report.right or left_read not in report.left:
        raise AssertionError(f"ambient reads disagree with bracketings: {report}")
    if gap != c_mass(x.mag, -y.mag):
        raise AssertionError("defect differs from the cancellation mass")
    return AmbientTrace(U, left_read, right_read, gap)


def is_obstruction_witness(x: Hyper, y: Hyper, z: Hyper) -> bool:
    """True when the two bracketings of ``x ⊞ y ⊞ z`` are disjoint.

    A disjoint pair rules out any decoding from an associative ambient monoid
    that lands in both bracketings.
    """
    return not assoc_at(x, y, z).intersects


def obstruction_witness() -> tuple[Hyper, Hyper, Hyper]:
    triple = pml_triple(1, 1, 1)
    if not is_obstruction_witness(*triple):
        raise AssertionError("witness bracketings intersect")
    return triple


__all__ = [
    "AMBIENT_ZERO", "AmbientElem", "AmbientTrace", "amb_add", "ambient_trace", "c_mass",
    "iota", "is_obstruction_witness", "obstruction_witness", "p_lambda", "pi",
]
