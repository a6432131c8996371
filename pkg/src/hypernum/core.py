"""Hypernumber universe: signs, hypernumbers, canonical hyper-sets.

A hypernumber is either ``ZERO`` or a pair ``(sign, magnitude)`` with sign in
``{+, -, L}`` and a strictly positive exact rational magnitude.  ``L`` is the
ASCII spelling of the Lambda sign.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Union

RationalLike = Union[int, Fraction, str]


class Sign(enum.IntEnum):
    """The four sign symbols.

    The integer order only fixes a canonical storage order for sets; it has
    no algebraic meaning.
    """

    ZERO = 0
    PLUS = 1
    MINUS = 2
    LAMBDA = 3

    @property
    def symbol(self) -> str:
        return _SYMBOLS[self]

    @classmethod
    def from_symbol(cls, text: str) -> "Sign":
        try:
            return _FROM_SYMBOL[text]
        except KeyError:
            raise ValueError(f"unknown sign token {text!r} (expected one of 0 + - L)") from None

    def __str__(self) -> str:
        return self.symbol


_SYMBOLS = {Sign.ZERO: "0", Sign.PLUS: "+", Sign.MINUS: "-", Sign.LAMBDA: "L"}
_FROM_SYMBOL = {v: k for k, v in _SYMBOLS.items()}
_FROM_SYMBOL["Λ"] = Sign.LAMBDA

NONZERO_SIGNS = (Sign.PLUS, Sign.MINUS, Sign.LAMBDA)


def to_rational(value: RationalLike) -> Fraction:
    """Coerce ``value`` to an exact rational; floats and decimals are refused."""
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


def parse_rational(text: str) -> Fraction:
    """Parse ``p``, ``-p`` or ``p/q``.  Decimal notation is rejected."""
    s = text.strip()
    num, slash, den = s.partition("/")
    neg = num.startswith("-")
    digits = num[1:] if neg else num
    if not digits.isdigit() or (slash and not den.isdigit()):
        raise ValueError(f"not an exact rational: {text!r} (use p or p/q)")
    q = int(den) if slash else 1
    if q == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(-int(digits) if neg else int(digits), q)


@dataclass(frozen=True, order=True)
class Hyper:
    """A hypernumber.  Use :data:`ZERO` or :func:`hyper` to build one."""

    sign: Sign
    mag: Fraction

    def __post_init__(self) -> None:
        if not isinstance(self.sign, Sign):
            object.__setattr__(self, "sign", Sign(self.sign))
        if not isinstance(self.mag, Fraction):
            object.__setattr__(self, "mag", to_rational(self.mag))
        if self.sign is Sign.ZERO:
            if self.mag != 0:
                raise ValueError("zero hypernumber must have magnitude 0")
        elif self.mag <= 0:
            raise ValueError("magnitude must be positive")

    @property
    def is_zero(self) -> bool:
        return self.sign is Sign.ZERO

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        return f"({self.sign.symbol} {self.mag})"

    def __repr__(self) -> str:
        return f"Hyper{self}" if not self.is_zero else "ZERO"


ZERO = Hyper(Sign.ZERO, Fraction(0))


def hyper(sign: Sign | str, mag: RationalLike) -> Hyper:
    """Build ``(sign, mag)``; ``hyper("0", 0)`` gives :data:`ZERO`."""
    if isinstance(sign, str):
        sign = Sign.from_symbol(sign)
    return Hyper(sign, to_rational(mag))


def sgn(h: Hyper) -> Sign:
    return h.sign


def mag(h: Hyper) -> Fraction:
    return h.mag


def embed_real(r: RationalLike) -> Hyper:
    """Embed a rational into the classical line ``{0} ∪ H+ ∪ H-``."""
    r = to_rational(r)
    if r == 0:
        return ZERO
    if r > 0:
        return Hyper(Sign.PLUS, r)
    return Hyper(Sign.MINUS, -r)


def is_classical(h: Hyper) -> bool:
    return h.sign is not Sign.LAMBDA


def classical_value(h: Hyper) -> Fraction:
    """Inverse of :func:`embed_real` on the classical line."""
    if h.sign is Sign.LAMBDA:
        raise ValueError(f"{h} is not on the classical line")
    return -h.mag if h.sign is Sign.MINUS else h.mag


def real_sign(r: RationalLike) -> Sign:
    return embed_real(r).sign


class HyperSet:
    """Finite set of hypernumbers kept sorted by (sign, magnitude)."""

    __slots__ = ("_elems", "_hash")

    def __init__(self, elems: Iterable[Hyper] = ()) -> None:
        items = set(elems)
        for e in items:
            if not isinstance(e, Hyper):
                raise TypeError(f"HyperSet elements must be Hyper, got {type(e).__name__}")
        self._elems: tuple[Hyper, ...] = tuple(sorted(items))
        self._hash: int | None = None

    @classmethod
    def of(cls, *elems: Hyper) -> "HyperSet":
        return cls(elems)

    def __iter__(self) -> Iterator[Hyper]:
        return iter(self._elems)

    def __len__(self) -> int:
        return len(self._elems)

    def __bool__(self) -> bool:
        return bool(self._elems)

    def __contains__(self, item: object) -> bool:
        return item in self._elems

    def __eq__(self, other: object) -> bool:
        if isinstance(other, HyperSet):
            return self._elems == other._elems
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self._elems)
        return self._hash

    def __or__(self, other: "HyperSet") -> "HyperSet":
        return HyperSet(self._elems + other._elems)

    def __and__(self, other: "HyperSet") -> "HyperSet":
        return HyperSet(e for e in self._elems if e in other)

    def __le__(self, other: "HyperSet") -> bool:
        return all(e in other for e in self._elems)

    def signs(self) -> frozenset[Sign]:
        return frozenset(e.sign for e in self._elems)

    @property
    def elements(self) -> tuple[Hyper, ...]:
        return self._elems

    def __str__(self) -> str:
        return "{" + ", ".join(str(e) for e in self._elems) + "}"

    def __repr__(self) -> str:
        return f"HyperSet({self})"
