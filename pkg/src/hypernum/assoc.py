"""Associativity probes and the defect of the ordered (+, -, L) triple."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations

from .core import Hyper, HyperSet, RationalLike, Sign, to_rational
from .hyperadd import hyper_add, hyper_add_sets


@dataclass(frozen=True)
class AssocReport:
    left: HyperSet   # (x ⊞ y) ⊞ z
    right: HyperSet  # x ⊞ (y ⊞ z)
    equal: bool
    intersects: bool


def assoc_at(x: Hyper, y: Hyper, z: Hyper) -> AssocReport:
    left = hyper_add_sets(hyper_add(x, y), HyperSet.of(z))
    right = hyper_add_sets(HyperSet.of(x), hyper_add(y, z))
    return AssocReport(left, right, left == right, bool(left & right))


def _positive(*values: RationalLike) -> tuple[Fraction, ...]:
    out = tuple(to_rational(v) for v in values)
    if any(v <= 0 for v in out):
        raise ValueError(f"magnitudes must be positive, got {', '.join(map(str, out))}")
    return out


def pml_triple(a: RationalLike, b: RationalLike, c: RationalLike) -> tuple[Hyper, Hyper, Hyper]:
    """The ordered triple ``((+, a), (-, b), (L, c))``."""
    a, b, c = _positive(a, b, c)
    return Hyper(Sign.PLUS, a), Hyper(Sign.MINUS, b), Hyper(Sign.LAMBDA, c)


def bracket_magnitudes(a: RationalLike, b: RationalLike, c: RationalLike) -> tuple[Fraction, Fraction]:
    """Magnitudes of the two singleton bracketings, read off by evaluation."""
    report = assoc_at(*pml_triple(a, b, c))
    if len(report.left) != 1 or len(report.right) != 1:
        raise AssertionError(f"expected singleton bracketings, got {report}")
    (lft,), (rgt,) = report.left, report.right
    return lft.mag, rgt.mag


def defect_components(a: RationalLike, b: RationalLike, c: RationalLike) -> tuple[Fraction, Fraction]:
    """``(m_L, m_R) = (c + |a - b|, a + b + c)``."""
    a, b, c = _positive(a, b, c)
    return c + abs(a - b), a + b + c


def defect(a: RationalLike, b: RationalLike, c: RationalLike) -> Fraction:
    """Associativity defect ``m_R - m_L = 2 min(a, b)``.

    Under ``python -O`` the bracketing cross-check is skipped.
    """
    a, b, c = _positive(a, b, c)
    value = 2 * min(a, b)
    if __debug__:
        m_l, m_r = bracket_magnitudes(a, b, c)
        assert m_r - m_l == value, (a, b, c, m_l, m_r)
    return value


def permutation_reports(x: Hyper, y: Hyper, z: Hyper) -> dict[tuple[Hyper, Hyper, Hyper], AssocReport]:
    """:func:`assoc_at` over every ordering of the triple."""
    return {p: assoc_at(*p) for p in permutations((x, y, z))}
