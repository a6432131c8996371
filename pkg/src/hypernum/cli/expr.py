"""Expression language for hypernumber arithmetic.

Grammar (whitespace is insignificant)::

    expr    := term ('+' term)*              # '+' is hyperaddition, left-nested
    term    := factor ('*' factor)*          # multiplication, left-nested
    factor  := literal | '(' expr ')' | 'neg' '(' expr ')'
             | rational '*' factor           # scalar action
             | '0'
    literal := '(' ('+' | '-' | 'L') rational ')'
    rational:= ['-'] digits ['/' digits]

Parentheses are kept verbatim in the tree: ``a + b + c`` means
``(a + b) + c`` and is never re-associated.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from ..core import ZERO, Hyper, HyperSet, Sign
from ..hyperadd import hyper_add_sets, neg
from ..mult import mul_sets, scalar_mul_set


class ParseError(ValueError):
    def __init__(self, message: str, offset: int, expected: frozenset = frozenset()):
        self.offset = offset
        self.expected = frozenset(expected)
        detail = f"; expected one of {', '.join(sorted(self.expected))}" if self.expected else ""
        super().__init__(f"at offset {offset}: {message}{detail}")


class SemanticError(ValueError):
    def __init__(self, message: str, offset: int):
        self.offset = offset
        super().__init__(f"at offset {offset}: {message}")


@dataclass(frozen=True)
class Literal:
    value: Hyper


@dataclass(frozen=True)
class HyperAdd:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Mul:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class ScalarMul:
    scalar: Fraction
    operand: "Expr"


@dataclass(frozen=True)
class Neg:
    operand: "Expr"


Expr = Union[Literal, HyperAdd, Mul, ScalarMul, Neg]

_TOKEN = re.compile(r"\s*(?:(?P<num>\d+)|(?P<word>[A-Za-z_]\w*)|(?P<op>[()+\-*/]))")


@dataclass(frozen=True)
class _Tok:
    kind: str  # 'num', 'L', 'neg', one of ( ) + - * /, or 'eof'
    text: str
    offset: int


def tokenize(src: str) -> list[_Tok]:
    toks = []
    pos = 0
    while True:
        while pos < len(src) and src[pos].isspace():
            pos += 1
        if pos >= len(src):
            break
        m = _TOKEN.match(src, pos)
        if not m:
            ch = src[pos]
            if ch == ".":
                raise ParseError("decimal notation is not supported; write p/q", pos)
            raise ParseError(f"unexpected character {ch!r}", pos)
        start = m.start(m.lastgroup)
        text = m.group(m.lastgroup)
        if m.lastgroup == "num":
            if m.end() < len(src) and src[m.end()] == ".":
                raise ParseError("decimal notation is not supported; write p/q", m.end())
            toks.append(_Tok("num", text, start))
        elif m.lastgroup == "word":
            if text not in ("L", "neg"):
                raise ParseError(f"unknown word {text!r}", start, frozenset({"L", "neg"}))
            toks.append(_Tok(text, text, start))
        else:
            toks.append(_Tok(text, text, start))
        pos = m.end()
    toks.append(_Tok("eof", "", len(src)))
    return toks


_SIGN_TOKENS = {"+": Sign.PLUS, "-": Sign.MINUS, "L": Sign.LAMBDA}


class _Parser:
    def __init__(self, src: str):
        self.toks = tokenize(src)
        self.i = 0

    def peek(self, k: int = 0) -> _Tok:
        return self.toks[min(self.i + k, len(self.toks) - 1)]

    def take(self, kind: str) -> _Tok:
        tok = self.peek()
        if tok.kind != kind:
            raise ParseError(f"unexpected {tok.text or 'end of input'!r}", tok.offset, frozenset({kind}))
        self.i += 1
        return tok

    def at(self, kind: str) -> bool:
        return self.peek().kind == kind

    def parse(self) -> Expr:
        e = self.expr()
        if not self.at("eof"):
            tok = self.peek()
            raise ParseError(f"unexpected {tok.text!r}", tok.offset, frozenset({"+", "*", "eof"}))
        return e

    def expr(self) -> Expr:
        e = self.term()
        while self.at("+"):
            self.i += 1
            e = HyperAdd(e, self.term())
        return e

    def term(self) -> Expr:
        e = self.factor()
        while self.at("*"):
            self.i += 1
            e = Mul(e, self.factor())
        return e

    def _rational_len(self, k: int) -> int:
        """Length in tokens of a rational starting at lookahead ``k``, or 0."""
        n = 1 if self.peek(k).kind == "-" else 0
        if self.peek(k + n).kind != "num":
            return 0
        n += 1
        if self.peek(k + n).kind == "/" and self.peek(k + n + 1).kind == "num":
            n += 2
        return n

    def rational(self) -> Fraction:
        start = self.peek()
        negative = self.at("-")
        if negative:
            self.i += 1
        num = self.take("num")
        den = 1
        if self.at("/"):
            self.i += 1
            den = int(self.take("num").text)
            if den == 0:
                raise SemanticError("zero denominator", start.offset)
        value = Fraction(int(num.text), den)
        return -value if negative else value

    def _is_literal(self) -> bool:
        # '(' sign rational ')'
        if not self.at("(") or self.peek(1).kind not in _SIGN_TOKENS:
            return False
        n = self._rational_len(2)
        return n > 0 and self.peek(2 + n).kind == ")"

    def factor(self) -> Expr:
        tok = self.peek()
        if self._is_literal():
            self.i += 1
            sign = _SIGN_TOKENS[self.take(self.peek().kind).kind]
            mag_tok = self.peek()
            magnitude = self.rational()
            self.take(")")
            if magnitude <= 0:
                raise SemanticError("magnitude must be positive", mag_tok.offset)
            return Literal(Hyper(sign, magnitude))
        if tok.kind == "(":
            self.i += 1
            e = self.expr()
            self.take(")")
            return e
        if tok.kind == "neg":
            self.i += 1
            self.take("(")
            e = self.expr()
            self.take(")")
            return Neg(e)
        if self._rational_len(0):
            t = self.rational()
            if not self.at("*"):
                if t == 0 and tok.kind == "num":
                    return Literal(ZERO)
                nxt = self.peek()
                raise ParseError("a bare rational must be a scalar factor", nxt.offset, frozenset({"*"}))
            self.i += 1
            return ScalarMul(t, self.factor())
        raise ParseError(f"unexpected {tok.text or 'end of input'!r}", tok.offset,
                         frozenset({"(", "0", "neg", "rational"}))


def parse(src: str) -> Expr:
    return _Parser(src).parse()


def parse_literal(src: str) -> Hyper:
    """Parse a single literal such as ``(L 3/2)`` or ``0``."""
    e = parse(src)
    if not isinstance(e, Literal):
        raise ParseError("expected a single hypernumber literal", 0, frozenset({"literal"}))
    return e.value


def format_hyper(h: Hyper) -> str:
    return "0" if h.is_zero else f"({h.sign.symbol} {h.mag})"


def to_source(e: Expr) -> str:
    """Fully parenthesized source text; ``parse(to_source(e)) == e``."""
    if isinstance(e, Literal):
        return format_hyper(e.value)
    if isinstance(e, HyperAdd):
        return f"({to_source(e.left)} + {to_source(e.right)})"
    if isinstance(e, Mul):
        left = "(0)" if e.left == Literal(ZERO) else to_source(e.left)
        return f"({left} * {to_source(e.right)})"
    if isinstance(e, ScalarMul):
        return f"({e.scalar} * {to_source(e.operand)})"
    if isinstance(e, Neg):
        return f"neg({to_source(e.operand)})"
    raise TypeError(f"not an expression: {e!r}")


@dataclass(frozen=True)
class EvalResult:
    value_set: HyperSet
    trace: Optional[tuple[tuple[str, HyperSet], ...]] = None


def evaluate(e: Expr, trace: bool = False) -> EvalResult:
    steps: list[tuple[str, HyperSet]] = []

    def go(node: Expr) -> HyperSet:
        if isinstance(node, Literal):
            out = HyperSet.of(node.value)
        elif isinstance(node, HyperAdd):
            out = hyper_add_sets(go(node.left), go(node.right))
        elif isinstance(node, Mul):
            out = mul_sets(go(node.left), go(node.right))
        elif isinstance(node, ScalarMul):
            out = scalar_mul_set(node.scalar, go(node.operand))
        elif isinstance(node, Neg):
            out = HyperSet(neg(h) for h in go(node.operand))
        else:
            raise TypeError(f"not an expression: {node!r}")
        if trace:
            steps.append((to_source(node), out))
        return out

    value = go(e)
    return EvalResult(value, tuple(steps) if trace else None)


def eval_source(src: str, trace: bool = False) -> EvalResult:
    return evaluate(parse(src), trace=trace)
