"""Finite commutative monoids stored as Cayley tables over dense indices."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, Optional, Sequence

DEFAULT_MAX_ORDER = 64

Table = tuple[tuple[int, ...], ...]


class MonoidLawError(ValueError):
    """A candidate table violates one of the commutative monoid laws.

    ``law`` is one of ``"shape"``, ``"range"``, ``"neutrality"``,
    ``"commutativity"``, ``"associativity"`` and ``witness`` holds the
    offending element, pair or triple.
    """

    def __init__(self, law: str, witness: tuple, message: str):
        super().__init__(message)
        self.law = law
        self.witness = witness


class ElementError(IndexError):
    pass


@dataclass(frozen=True)
class FiniteMonoid:
    table: Table
    neutral: int
    labels: Optional[tuple[str, ...]] = None
    name: str = field(default="M", compare=False)

    @property
    def order(self) -> int:
        return len(self.table)

    @property
    def elements(self) -> range:
        return range(len(self.table))

    def check(self, *xs: int) -> None:
        k = len(self.table)
        for x in xs:
            if not (isinstance(x, int) and 0 <= x < k):
                raise ElementError(f"element {x!r} out of range for monoid of order {k}")

    def mul(self, a: int, b: int) -> int:
        self.check(a, b)
        return self.table[a][b]

    def prod(self, *xs: int) -> int:
        acc = self.neutral
        for x in xs:
            acc = self.mul(acc, x)
        return acc

    def pow(self, a: int, k: int) -> int:
        self.check(a)
        if k < 0:
            raise ValueError("exponent must be nonnegative")
        result, base = self.neutral, a
        while k:
            if k & 1:
                result = self.table[result][base]
            base = self.table[base][base]
            k >>= 1
        return result

    def label(self, a: int) -> str:
        if self.labels is None:
            return str(a)
        return self.labels[a]

    def __repr__(self) -> str:
        return f"FiniteMonoid(name={self.name!r}, order={self.order}, neutral={self.neutral})"


def validate(
    table: Sequence[Sequence[int]],
    neutral: int,
    labels: Optional[Sequence[str]] = None,
    name: str = "M",
    max_order: int = DEFAULT_MAX_ORDER,
) -> FiniteMonoid:
    """Check the commutative monoid laws and return the monoid.

    Raises :class:`MonoidLawError` naming the first violated law together
    with a witness.
    """
    k = len(table)
    if k == 0:
        raise MonoidLawError("shape", (), "empty table")
    if k > max_order:
        raise MonoidLawError("shape", (k,), f"order {k} exceeds cap {max_order}")
    for i, row in enumerate(table):
        if len(row) != k:
            raise MonoidLawError("shape", (i,), f"row {i} has {len(row)} entries, expected {k}")
        for j, v in enumerate(row):
            if not (isinstance(v, int) and 0 <= v < k):
                raise MonoidLawError("range", (i, j), f"entry [{i}][{j}] = {v!r} out of range")
    if not (isinstance(neutral, int) and 0 <= neutral < k):
        raise MonoidLawError("range", (neutral,), f"neutral {neutral!r} out of range")
    if labels is not None and len(labels) != k:
        raise MonoidLawError("shape", (len(labels),), "one label per element required")
    t = tuple(tuple(row) for row in table)
    for a in range(k):
        if t[neutral][a] != a:
            raise MonoidLawError("neutrality", (a,), f"{neutral}*{a} = {t[neutral][a]}, expected {a}")
    for a in range(k):
        for b in range(a + 1, k):
            if t[a][b] != t[b][a]:
                raise MonoidLawError("commutativity", (a, b), f"{a}*{b} != {b}*{a}")
    for a, b, c in product(range(k), repeat=3):
        if t[t[a][b]][c] != t[a][t[b][c]]:
            raise MonoidLawError("associativity", (a, b, c), f"({a}*{b})*{c} != {a}*({b}*{c})")
    return FiniteMonoid(t, neutral, tuple(labels) if labels is not None else None, name)


# -- elementwise analysis ----------------------------------------------------


def find_zero(M: FiniteMonoid) -> Optional[int]:
    for z in M.elements:
        if all(M.table[z][b] == z for b in M.elements):
            return z
    return None


@dataclass(frozen=True)
class Invertible:
    inverse: int


@dataclass(frozen=True)
class Nilpotent:
    degree: int


@dataclass(frozen=True)
class Neither:
    pass


ElementClassification = Invertible | Nilpotent | Neither


def inverse_of(M: FiniteMonoid, a: int) -> Optional[int]:
    M.check(a)
    for b in M.elements:
        if M.table[a][b] == M.neutral:
            return b
    return None


def nilpotency_degree(M: FiniteMonoid, a: int) -> Optional[int]:
    """Least k >= 1 with a^k the zero element, or None."""
    M.check(a)
    z = find_zero(M)
    if z is None:
        return None
    x = a
    # the powers of a enter their cycle within |M| steps
    for k in range(1, M.order + 1):
        if x == z:
            return k
        x = M.table[x][a]
    return None


def classify_element(M: FiniteMonoid, a: int) -> ElementClassification:
    inv = inverse_of(M, a)
    if inv is not None:
        return Invertible(inv)
    k = nilpotency_degree(M, a)
    if k is not None:
        return Nilpotent(k)
    return Neither()


def is_cancellative_element(M: FiniteMonoid, a: int) -> bool:
    M.check(a)
    row = M.table[a]
    return len(set(row)) == M.order


def is_inverse_monoid(M: FiniteMonoid) -> bool:
    return all(
        any(M.table[M.table[a][a]][b] == a for b in M.elements) for a in M.elements
    )


def subuniverse_generate(M: FiniteMonoid, X: Iterable[int] = ()) -> frozenset[int]:
    X = list(X)
    M.check(*X)
    found = {M.neutral, *X}
    todo = list(found)
    while todo:
        x = todo.pop()
        for y in list(found):
            p = M.table[x][y]
            if p not in found:
                found.add(p)
                todo.append(p)
    return frozenset(found)


def is_closed(M: FiniteMonoid, S: Iterable[int]) -> bool:
    S = set(S)
    return M.neutral in S and all(M.table[x][y] in S for x in S for y in S)


# -- constructors --------------------------------------------------------------


def trivial() -> FiniteMonoid:
    return FiniteMonoid(((0,),), 0, ("0",), "trivial")


def cyclic(s: int) -> FiniteMonoid:
    """Integers mod s under addition."""
    if s < 1:
        raise ValueError("cyclic(s) needs s >= 1")
    table = tuple(tuple((i + j) % s for j in range(s)) for i in range(s))
    return FiniteMonoid(table, 0, tuple(str(i) for i in range(s)), f"cyclic({s})")


def monogenic(n: int, m: int) -> FiniteMonoid:
    """Naturals under + with k identified with k+m for every k >= n."""
    if n < 0 or m < 1:
        raise ValueError("monogenic(n, m) needs n >= 0 and m >= 1")
    size = n + m

    def reduce(k):
        return k if k < n else n + (k - n) % m

    table = tuple(tuple(reduce(i + j) for j in range(size)) for i in range(size))
    return FiniteMonoid(table, 0, tuple(str(i) for i in range(size)), f"monogenic({n},{m})")


NINE_TRIPLES = tuple(product((0, 1), repeat=3))
SINK = 8


def triple_index(k: int, m: int, n: int) -> int:
    """Index of the triple <k,m,n> in :func:`nine_element`."""
    return NINE_TRIPLES.index((k, m, n))


def nine_element() -> FiniteMonoid:
    """{0,1}^3 plus a sink, with componentwise addition overflowing to the sink.

    Triples are indexed lexicographically (<0,0,0> = 0, ..., <1,1,1> = 7)
    and the sink is index 8.
    """

    def op(a, b):
        if a == SINK or b == SINK:
            return SINK
        s = tuple(x + y for x, y in zip(NINE_TRIPLES[a], NINE_TRIPLES[b]))
        return NINE_TRIPLES.index(s) if max(s) <= 1 else SINK

    table = tuple(tuple(op(a, b) for b in range(9)) for a in range(9))
    labels = tuple("".join(map(str, t)) for t in NINE_TRIPLES) + ("0",)
    return FiniteMonoid(table, 0, labels, "nine_element")


def direct_product(M1: FiniteMonoid, M2: FiniteMonoid, name: Optional[str] = None) -> FiniteMonoid:
    """Componentwise table; the pair (i, j) sits at index i * |M2| + j."""
    k2 = M2.order
    pairs = list(product(M1.elements, M2.elements))
    table = tuple(
        tuple(M1.table[a1][b1] * k2 + M2.table[a2][b2] for (b1, b2) in pairs)
        for (a1, a2) in pairs
    )
    labels = tuple(f"({M1.label(a)},{M2.label(b)})" for a, b in pairs)
    return FiniteMonoid(
        table, M1.neutral * k2 + M2.neutral, labels, name or f"{M1.name}x{M2.name}"
    )
