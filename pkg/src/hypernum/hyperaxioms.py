"""Exhaustive checks of the canonical hypergroup and hyperfield axioms.

Works on any finite hypermagma given as a Cayley table ``(a, b) -> set``.
Axioms are reported as HG1 (commutativity), HG2 (associativity),
HG3 (neutral element), HG4 (unique inverses) and HG5 (reversibility).
"""
from __future__ import annotations

from dataclasses import dataclass, field, replace
from itertools import product
from typing import Iterable, Mapping, Optional

MAX_CARRIER = 64

Label = str
Table = Mapping[tuple[Label, Label], frozenset]
MulTable = Mapping[tuple[Label, Label], Label]


class TableError(ValueError):
    """Malformed Cayley table.  ``lineno`` is set when parsing a file."""

    def __init__(self, message: str, lineno: Optional[int] = None):
        self.lineno = lineno
        super().__init__(f"line {lineno}: {message}" if lineno is not None else message)


@dataclass(frozen=True)
class FiniteHypermagma:
    carrier: tuple[Label, ...]
    table: Mapping[tuple[Label, Label], frozenset]

    def __post_init__(self) -> None:
        carrier = tuple(self.carrier)
        object.__setattr__(self, "carrier", carrier)
        if not carrier:
            raise TableError("carrier is empty")
        if len(set(carrier)) != len(carrier):
            raise TableError("carrier has repeated labels")
        if len(carrier) > MAX_CARRIER:
            raise TableError(f"carrier larger than {MAX_CARRIER} elements")
        members = set(carrier)
        table = {}
        for a, b in product(carrier, repeat=2):
            if (a, b) not in self.table:
                raise TableError(f"missing entry {a} + {b}")
            entry = frozenset(self.table[a, b])
            if not entry:
                raise TableError(f"empty entry {a} + {b}")
            if not entry <= members:
                raise TableError(f"entry {a} + {b} leaves the carrier: {sorted(entry - members)}")
            table[a, b] = entry
        extra = set(self.table) - set(table)
        if extra:
            raise TableError(f"entries outside the carrier: {sorted(extra)}")
        object.__setattr__(self, "table", table)

    def add(self, a: Label, b: Label) -> frozenset:
        return self.table[a, b]

    def add_sets(self, A: Iterable[Label], B: Iterable[Label]) -> frozenset:
        B = tuple(B)
        return frozenset().union(*(self.table[a, b] for a in A for b in B))

    def with_entry(self, a: Label, b: Label, value: Iterable[Label]) -> "FiniteHypermagma":
        table = dict(self.table)
        table[a, b] = frozenset(value)
        return replace(self, table=table)


@dataclass
class AxiomReport:
    commutative: bool
    associative: bool
    neutral: Optional[Label]
    unique_inverses: bool
    reversible: bool
    counterexamples: list[tuple[str, tuple]] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    def verdicts(self) -> dict[str, bool]:
        return {
            "HG1": self.commutative,
            "HG2": self.associative,
            "HG3": self.neutral is not None,
            "HG4": self.unique_inverses,
            "HG5": self.reversible,
        }

    @property
    def canonical(self) -> bool:
        return all((self.commutative, self.associative, self.neutral is not None,
                    self.unique_inverses, self.reversible))

    @property
    def passed(self) -> bool:
        return self.canonical


@dataclass
class HyperfieldReport(AxiomReport):
    zero_absorbing: bool = False
    units_group: bool = False
    distributivity: bool = False

    def verdicts(self) -> dict[str, bool]:
        out = super().verdicts()
        out.update(zero_absorbing=self.zero_absorbing, units_group=self.units_group,
                   distributivity=self.distributivity)
        return out

    @property
    def is_hyperfield(self) -> bool:
        return all(self.verdicts().values())

    @property
    def passed(self) -> bool:
        return self.is_hyperfield


def find_neutral(m: FiniteHypermagma) -> Optional[Label]:
    for e in m.carrier:
        if all(m.add(e, x) == {x} and m.add(x, e) == {x} for x in m.carrier):
            return e
    return None


def check_axioms(m: FiniteHypermagma) -> AxiomReport:
    cx: list[tuple[str, tuple]] = []
    notes: list[str] = []
    X = m.carrier

    commutative = True
    for a, b in product(X, repeat=2):
        if m.add(a, b) != m.add(b, a):
            commutative = False
            cx.append(("HG1", (a, b)))
            break

    associative = True
    for x, y, z in product(X, repeat=3):
        if m.add_sets(m.add(x, y), (z,)) != m.add_sets((x,), m.add(y, z)):
            associative = False
            cx.append(("HG2", (x, y, z)))
            break

    e = find_neutral(m)
    if e is None:
        cx.append(("HG3", ()))

    inverse: dict[Label, Label] = {}
    unique_inverses = False
    if e is None:
        notes.append("HG4 and HG5 need a neutral element; reported false")
        cx.append(("HG4", ()))
    else:
        unique_inverses = True
        for x in X:
            ys = tuple(y for y in X if e in m.add(x, y))
            if len(ys) != 1:
                unique_inverses = False
                cx.append(("HG4", (x,) + ys))
                break
            inverse[x] = ys[0]

    reversible = False
    if unique_inverses:
        reversible = True
        for x, y, z in product(X, repeat=3):
            if (x in m.add(y, z)) != (z in m.add(x, inverse[y])):
                reversible = False
                cx.append(("HG5", (x, y, z)))
                break
    else:
        notes.append("HG5 needs unique inverses; reported false")
        cx.append(("HG5", ()))

    return AxiomReport(commutative, associative, e, unique_inverses, reversible, cx, notes)


def check_hyperfield(m: FiniteHypermagma, mul_table: MulTable) -> HyperfieldReport:
    X = m.carrier
    for a, b in product(X, repeat=2):
        if (a, b) not in mul_table:
            raise TableError(f"missing entry {a} * {b}")
        if mul_table[a, b] not in X:
            raise TableError(f"entry {a} * {b} leaves the carrier: {mul_table[a, b]}")
    base = check_axioms(m)
    cx, notes = list(base.counterexamples), list(base.notes)
    mul = lambda a, b: mul_table[a, b]  # noqa: E731
    zero = base.neutral

    zero_absorbing = zero is not None
    if zero is None:
        notes.append("no additive neutral, so no zero to absorb")
    else:
        for a in X:
            if mul(zero, a) != zero or mul(a, zero) != zero:
                zero_absorbing = False
                cx.append(("zero_absorbing", (a,)))
                break

    units_group = _check_units(X, zero, mul, cx, notes)

    distributivity = True
    for a, b, c in product(X, repeat=3):
        left = frozenset(mul(a, s) for s in m.add(b, c))
        right = frozenset(mul(s, a) for s in m.add(b, c))
        if not left <= m.add(mul(a, b), mul(a, c)) or not right <= m.add(mul(b, a), mul(c, a)):
            distributivity = False
            cx.append(("distributivity", (a, b, c)))
            break

    return HyperfieldReport(base.commutative, base.associative, base.neutral, base.unique_inverses,
                            base.reversible, cx, notes, zero_absorbing, units_group, distributivity)


def _check_units(X, zero, mul, cx, notes) -> bool:
    if zero is None:
        notes.append("unit group undefined without a zero")
        cx.append(("units_group", ()))
        return False
    G = [x for x in X if x != zero]
    if not G:
        cx.append(("units_group", ()))
        return False
    for a, b in product(G, repeat=2):
        if mul(a, b) not in G or mul(a, b) != mul(b, a):
            cx.append(("units_group", (a, b)))
            return False
    for a, b, c in product(G, repeat=3):
        if mul(mul(a, b), c) != mul(a, mul(b, c)):
            cx.append(("units_group", (a, b, c)))
            return False
    ones = [u for u in G if all(mul(u, g) == g for g in G)]
    if not ones:
        cx.append(("units_group", ()))
        return False
    one = ones[0]
    for a in G:
        if not any(mul(a, b) == one for b in G):
            cx.append(("units_group", (a,)))
            return False
    return True


# --- bundled fixtures -------------------------------------------------------

_SIGN_HYPERFIELD_TEXT = """\
# three-element sign hyperfield
carrier: 0 + -
0 + 0 = {0}
0 + + = {+}
0 + - = {-}
+ + 0 = {+}
+ + + = {+}
+ + - = {+, 0, -}
- + 0 = {-}
- + + = {+, 0, -}
- + - = {-}
0 * 0 = 0
0 * + = 0
0 * - = 0
+ * 0 = 0
+ * + = +
+ * - = -
- * 0 = 0
- * + = -
- * - = +
"""

_SSET_TEXT = """\
# four-sign hyperoperation on {0, +, -, L}
carrier: 0 + - L
0 + 0 = {0}
0 + + = {+}
0 + - = {-}
0 + L = {L}
+ + 0 = {+}
+ + + = {+}
+ + - = {+, 0, -}
+ + L = {L}
- + 0 = {-}
- + + = {+, 0, -}
- + - = {-}
- + L = {L}
L + 0 = {L}
L + + = {L}
L + - = {L}
L + L = {0, +, -, L}
"""

FIXTURES = {"sign_hyperfield": _SIGN_HYPERFIELD_TEXT, "sset": _SSET_TEXT}


def fixture_text(name: str) -> str:
    try:
        return FIXTURES[name]
    except KeyError:
        raise KeyError(f"unknown fixture {name!r}; choose from {sorted(FIXTURES)}") from None


def load_fixture(name: str) -> tuple[FiniteHypermagma, Optional[dict]]:
    return parse_table(fixture_text(name))


def hypermagma_from_hyper_sample(name: str) -> FiniteHypermagma:
    return load_fixture(name)[0]


def cyclic_group(n: int) -> FiniteHypermagma:
    """``Z/n`` with singleton sums."""
    X = tuple(str(i) for i in range(n))
    return FiniteHypermagma(X, {(a, b): frozenset({str((int(a) + int(b)) % n)}) for a, b in product(X, repeat=2)})


def prime_field(p: int) -> tuple[FiniteHypermagma, dict]:
    X = tuple(str(i) for i in range(p))
    return cyclic_group(p), {(a, b): str(int(a) * int(b) % p) for a, b in product(X, repeat=2)}


# --- text format ------------------------------------------------------------

def _split_lhs(lhs: str, carrier: set, lineno: int) -> tuple[Label, str, Label]:
    compact = "".join(lhs.split())
    found = []
    for i, ch in enumerate(compact):
        if ch in "+*" and compact[:i] in carrier and compact[i + 1:] in carrier:
            found.append((compact[:i], ch, compact[i + 1:]))
    if len(found) != 1:
        why = "ambiguous" if found else "expected 'a + b' or 'a * b' over the carrier"
        raise TableError(f"cannot read left side {lhs.strip()!r}: {why}", lineno)
    return found[0]


def parse_table(text: str) -> tuple[FiniteHypermagma, Optional[dict]]:
    """Parse ``carrier: a b ...`` followed by ``a + b = {x, y}`` / ``a * b = c`` lines."""
    carrier: Optional[tuple[str, ...]] = None
    carrier_line = 0
    add: dict = {}
    mul: dict = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if carrier is None:
            head, colon, rest = line.partition(":")
            if not colon or head.strip() != "carrier":
                raise TableError("first line must be 'carrier: a b c ...'", lineno)
            carrier = tuple(rest.split())
            carrier_line = lineno
            if not carrier:
                raise TableError("carrier is empty", lineno)
            if len(set(carrier)) != len(carrier):
                raise TableError("carrier has repeated labels", lineno)
            continue
        lhs, eq, rhs = line.partition("=")
        if not eq:
            raise TableError("missing '='", lineno)
        a, op, b = _split_lhs(lhs, set(carrier), lineno)
        rhs = rhs.strip()
        if op == "+":
            if not (rhs.startswith("{") and rhs.endswith("}")):
                raise TableError("hyper-sum must be written {x, y, ...}", lineno)
            items = [t.strip() for t in rhs[1:-1].split(",")]
            if items == [""] or any(not t for t in items):
                raise TableError("empty or malformed set", lineno)
            target, value = add, frozenset(items)
            bad = [t for t in items if t not in carrier]
        else:
            value = rhs[1:-1].strip() if rhs.startswith("{") and rhs.endswith("}") else rhs
            target, bad = mul, ([] if value in carrier else [value])
        if bad:
            raise TableError(f"unknown label(s) {bad}", lineno)
        if (a, b) in target:
            raise TableError(f"duplicate entry {a} {op} {b}", lineno)
        target[a, b] = value
    if carrier is None:
        raise TableError("no carrier line")
    try:
        magma = FiniteHypermagma(carrier, add)
        if mul:
            missing = [k for k in product(carrier, repeat=2) if k not in mul]
            if missing:
                raise TableError(f"missing entry {missing[0][0]} * {missing[0][1]}")
    except TableError as exc:
        raise TableError(str(exc), carrier_line) from None
    return magma, (mul or None)


def format_table(m: FiniteHypermagma, mul_table: Optional[MulTable] = None) -> str:
    lines = ["carrier: " + " ".join(m.carrier)]
    order = {x: i for i, x in enumerate(m.carrier)}
    for a, b in product(m.carrier, repeat=2):
        entry = sorted(m.add(a, b), key=order.__getitem__)
        lines.append(f"{a} + {b} = {{{', '.join(entry)}}}")
    if mul_table:
        for a, b in product(m.carrier, repeat=2):
            lines.append(f"{a} * {b} = {mul_table[a, b]}")
    return "\n".join(lines) + "\n"
