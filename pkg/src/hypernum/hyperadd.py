"""Set-valued hyperaddition on hypernumbers and bracketed n-fold sums."""
from __future__ import annotations

from functools import lru_cache
from typing import Sequence

from .core import ZERO, Hyper, HyperSet, Sign

MAX_FOLD_LENGTH = 12

_SWAP = {Sign.PLUS: Sign.MINUS, Sign.MINUS: Sign.PLUS, Sign.LAMBDA: Sign.LAMBDA}


def _sum(x: Hyper, y: Hyper) -> tuple[Hyper, ...]:
    if x.is_zero:
        return (y,)
    if y.is_zero:
        return (x,)
    s, t = x.sign, y.sign
    a, b = x.mag, y.mag
    if s == t and s is not Sign.LAMBDA:
        return (Hyper(s, a + b),)
    if {s, t} == {Sign.PLUS, Sign.MINUS}:
        diff = a - b if s is Sign.PLUS else b - a  # value of the classical sum
        if diff == 0:
            return (ZERO,)
        return (Hyper(Sign.PLUS, diff) if diff > 0 else Hyper(Sign.MINUS, -diff),)
    if s is Sign.LAMBDA and t is Sign.LAMBDA:
        if a == b:
            return (Hyper(Sign.LAMBDA, 2 * a), ZERO)
        gap = abs(a - b)
        return (Hyper(Sign.LAMBDA, a + b), Hyper(Sign.PLUS, gap), Hyper(Sign.MINUS, gap))
    # exactly one summand in the Lambda sector
    return (Hyper(Sign.LAMBDA, a + b),)


def hyper_add(x: Hyper, y: Hyper) -> HyperSet:
    """Hyper-sum ``x ⊞ y``; always a nonempty set of at most three elements."""
    return HyperSet(_sum(x, y))


def neg(x: Hyper) -> Hyper:
    """The unique ``y`` with ``ZERO in hyper_add(x, y)``."""
    if x.is_zero:
        return x
    return Hyper(_SWAP[x.sign], x.mag)


def hyper_add_sets(A: HyperSet, B: HyperSet) -> HyperSet:
    """Union of ``a ⊞ b`` over ``a in A``, ``b in B``."""
    if not A or not B:
        raise ValueError("hyper-sum of an empty set is undefined")
    out: set[Hyper] = set()
    for a in A:
        for b in B:
            out.update(_sum(a, b))
    return HyperSet(out)


def fold_bracketings(xs: Sequence[Hyper]) -> dict[str, HyperSet]:
    """Evaluate every full binary bracketing of ``xs`` (order preserved).

    Keys are index trees such as ``"((0 1) 2)"``; the number of keys is the
    Catalan number ``C(len(xs) - 1)``.  Hyper-sets grow quickly when many
    operands lie in the Lambda sector, so near the length cap such inputs can
    take minutes.
    """
    xs = tuple(xs)
    if not xs:
        raise ValueError("cannot fold an empty list")
    if len(xs) > MAX_FOLD_LENGTH:
        raise ValueError(f"at most {MAX_FOLD_LENGTH} operands supported, got {len(xs)}")

    sums: dict[tuple[HyperSet, HyperSet], HyperSet] = {}  # distinct shapes often share values

    def add(lv: HyperSet, rv: HyperSet) -> HyperSet:
        key = (lv, rv)
        if key not in sums:
            sums[key] = hyper_add_sets(lv, rv)
        return sums[key]

    @lru_cache(maxsize=None)
    def shapes(i: int, j: int) -> tuple[tuple[str, HyperSet], ...]:
        if i == j:
            return ((str(i), HyperSet.of(xs[i])),)
        out = []
        for k in range(i, j):
            for ls, lv in shapes(i, k):
                for rs, rv in shapes(k + 1, j):
                    out.append((f"({ls} {rs})", add(lv, rv)))
        return tuple(out)

    return dict(shapes(0, len(xs) - 1))
