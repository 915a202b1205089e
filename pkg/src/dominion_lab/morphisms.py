"""Homomorphisms, submonoids, congruences and subdirect irreducibility."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable, Optional

from .monoid import FiniteMonoid, subuniverse_generate

DEFAULT_HOM_CAP = 1_000_000


class CapExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class Homomorphism:
    source: FiniteMonoid
    target: FiniteMonoid
    map: tuple[int, ...]

    def __call__(self, a: int) -> int:
        return self.map[a]

    def is_valid(self) -> bool:
        S, T, h = self.source, self.target, self.map
        if len(h) != S.order or any(not 0 <= x < T.order for x in h):
            return False
        if h[S.neutral] != T.neutral:
            return False
        return all(h[S.table[a][b]] == T.table[h[a]][h[b]] for a in S.elements for b in S.elements)

    def image(self) -> frozenset[int]:
        return frozenset(self.map)

    def compose(self, after: "Homomorphism") -> "Homomorphism":
        """``after`` applied to the result of ``self``."""
        return Homomorphism(self.source, after.target, tuple(after.map[x] for x in self.map))


@dataclass(frozen=True)
class Submonoid:
    ambient: FiniteMonoid
    universe: frozenset[int]

    def __post_init__(self):
        M, U = self.ambient, self.universe
        M.check(*U)
        if M.neutral not in U:
            raise ValueError("submonoid must contain the neutral element")
        for x in U:
            for y in U:
                if M.table[x][y] not in U:
                    raise ValueError(f"not closed: {x}*{y} = {M.table[x][y]} escapes")

    def __contains__(self, a: int) -> bool:
        return a in self.universe

    def __iter__(self):
        return iter(sorted(self.universe))

    def __len__(self) -> int:
        return len(self.universe)

    def as_monoid(self, name: Optional[str] = None) -> tuple[FiniteMonoid, Homomorphism]:
        """The submonoid as a standalone monoid plus its inclusion map."""
        M = self.ambient
        elems = sorted(self.universe)
        idx = {x: i for i, x in enumerate(elems)}
        table = tuple(tuple(idx[M.table[x][y]] for y in elems) for x in elems)
        labels = tuple(M.label(x) for x in elems)
        S = FiniteMonoid(table, idx[M.neutral], labels, name or f"sub({M.name})")
        return S, Homomorphism(S, M, tuple(elems))


def generated_submonoid(M: FiniteMonoid, X: Iterable[int]) -> Submonoid:
    return Submonoid(M, subuniverse_generate(M, X))


def all_submonoids(M: FiniteMonoid) -> list[Submonoid]:
    """Every submonoid of M, ordered by (size, sorted elements)."""
    others = [x for x in M.elements if x != M.neutral]
    found = set()
    for bits in product((0, 1), repeat=len(others)):
        S = {M.neutral} | {x for x, bit in zip(others, bits) if bit}
        if all(M.table[x][y] in S for x in S for y in S):
            found.add(frozenset(S))
    return [Submonoid(M, S) for S in sorted(found, key=lambda s: (len(s), sorted(s)))]


# -- congruences ---------------------------------------------------------------


@dataclass(frozen=True)
class Congruence:
    """Block map sending each element to the least element of its block."""

    monoid: FiniteMonoid
    rep: tuple[int, ...]

    def related(self, a: int, b: int) -> bool:
        return self.rep[a] == self.rep[b]

    def blocks(self) -> list[list[int]]:
        out: dict[int, list[int]] = {}
        for x, r in enumerate(self.rep):
            out.setdefault(r, []).append(x)
        return [out[r] for r in sorted(out)]

    def is_identity(self) -> bool:
        return all(r == x for x, r in enumerate(self.rep))

    def is_total(self) -> bool:
        return len(set(self.rep)) == 1

    def is_compatible(self) -> bool:
        M = self.monoid
        for a in M.elements:
            for b in M.elements:
                if self.rep[a] == self.rep[b] and a < b:
                    for c in M.elements:
                        if self.rep[M.table[a][c]] != self.rep[M.table[b][c]]:
                            return False
        return True

    def meet(self, other: "Congruence") -> "Congruence":
        return _from_keys(self.monoid, list(zip(self.rep, other.rep)))

    def __le__(self, other: "Congruence") -> bool:
        return all(other.rep[x] == other.rep[r] for x, r in enumerate(self.rep))


def _from_keys(M: FiniteMonoid, keys) -> Congruence:
    first: dict = {}
    rep = []
    for x, key in enumerate(keys):
        rep.append(first.setdefault(key, x))
    return Congruence(M, tuple(rep))


def identity_congruence(M: FiniteMonoid) -> Congruence:
    return Congruence(M, tuple(M.elements))


def total_congruence(M: FiniteMonoid) -> Congruence:
    return Congruence(M, (0,) * M.order)


def generated_congruence(M: FiniteMonoid, pairs: Iterable[tuple[int, int]]) -> Congruence:
    """Least congruence containing ``pairs``.

    Union-find over the elements; every successful union of x and y
    enqueues (xc, yc) for all c, so the result is closed under
    translations once the queue drains.
    """
    parent = list(M.elements)

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    queue = list(pairs)
    for a, b in queue:
        M.check(a, b)
    table = M.table
    while queue:
        x, y = queue.pop()
        rx, ry = find(x), find(y)
        if rx == ry:
            continue
        if rx < ry:
            parent[ry] = rx
        else:
            parent[rx] = ry
        rowx, rowy = table[x], table[y]
        queue.extend((rowx[c], rowy[c]) for c in M.elements if rowx[c] != rowy[c])
    return _from_keys(M, [find(x) for x in M.elements])


def principal_congruence(M: FiniteMonoid, a: int, b: int) -> Congruence:
    return generated_congruence(M, [(a, b)])


def all_principal_congruences(M: FiniteMonoid) -> set[Congruence]:
    return {principal_congruence(M, a, b) for a in M.elements for b in M.elements if a < b}


@dataclass(frozen=True)
class SIResult:
    si: bool
    monolith: Optional[Congruence]

    def __bool__(self) -> bool:
        return self.si


def is_subdirectly_irreducible(M: FiniteMonoid) -> SIResult:
    """SI iff the meet of all principal congruences is nontrivial.

    The trivial monoid is not SI.
    """
    principals = all_principal_congruences(M)
    if not principals:
        return SIResult(False, None)
    # elements agree in the meet iff they share a block in every principal congruence
    keys = list(zip(*(c.rep for c in sorted(principals, key=lambda c: c.rep))))
    meet = _from_keys(M, keys)
    if meet.is_identity():
        return SIResult(False, None)
    return SIResult(True, meet)


def quotient(M: FiniteMonoid, theta: Congruence, name: Optional[str] = None) -> tuple[FiniteMonoid, Homomorphism]:
    reps = sorted(set(theta.rep))
    idx = {r: i for i, r in enumerate(reps)}
    table = tuple(tuple(idx[theta.rep[M.table[r][s]]] for s in reps) for r in reps)
    labels = tuple("[" + ",".join(M.label(x) for x in block) + "]" for block in theta.blocks())
    Q = FiniteMonoid(table, idx[theta.rep[M.neutral]], labels, name or f"{M.name}/theta")
    proj = Homomorphism(M, Q, tuple(idx[theta.rep[x]] for x in M.elements))
    return Q, proj


def kernel(h: Homomorphism) -> Congruence:
    return _from_keys(h.source, h.map)


# -- homomorphism enumeration --------------------------------------------------


def generating_set(M: FiniteMonoid) -> list[int]:
    """A small generating set, chosen greedily in index order."""
    gens: list[int] = []
    reached = subuniverse_generate(M, [])
    for x in M.elements:
        if x not in reached:
            gens.append(x)
            reached = subuniverse_generate(M, gens)
    return gens


def _extend(S: FiniteMonoid, T: FiniteMonoid, gens, images) -> Optional[tuple[int, ...]]:
    h = [-1] * S.order
    h[S.neutral] = T.neutral
    todo = [S.neutral]
    while todo:
        x = todo.pop()
        for g, img in zip(gens, images):
            y, v = S.table[x][g], T.table[h[x]][img]
            if h[y] == -1:
                h[y] = v
                todo.append(y)
            elif h[y] != v:
                return None
    return tuple(h)


def enumerate_homomorphisms(
    M1: FiniteMonoid, M2: FiniteMonoid, cap: int = DEFAULT_HOM_CAP
) -> list[Homomorphism]:
    """All homomorphisms M1 -> M2, by backtracking over generator images."""
    gens = generating_set(M1)
    if M2.order ** len(gens) > cap:
        raise CapExceeded(f"{M2.order}^{len(gens)} candidate maps exceed cap {cap}")
    out = []
    for images in product(M2.elements, repeat=len(gens)):
        h = _extend(M1, M2, gens, images)
        if h is None:
            continue
        hom = Homomorphism(M1, M2, h)
        if hom.is_valid():
            out.append(hom)
    return out


def is_isomorphic(M1: FiniteMonoid, M2: FiniteMonoid) -> bool:
    if M1.order != M2.order:
        return False
    return any(len(set(h.map)) == M1.order for h in enumerate_homomorphisms(M1, M2))
