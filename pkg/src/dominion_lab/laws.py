"""Exhaustive enumeration of small commutative monoids and desk-scale law checks."""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations, product
from typing import Callable, Iterator, Optional

from .monoid import (
    FiniteMonoid,
    Invertible,
    Neither,
    Nilpotent,
    classify_element,
    find_zero,
    inverse_of,
    is_inverse_monoid,
    nine_element,
    triple_index,
)
from .morphisms import Submonoid, all_submonoids, generated_submonoid, is_subdirectly_irreducible
from .pushout import dominion_pushout
from .varieties import C2, VarietySignature, contains, generated_variety, is_inverse_variety, satisfies
from .zigzag import (
    ZigzagWitness,
    default_cap,
    extendable_inverse,
    random_witness,
    search_witness,
    spine_chain,
    transform_drop_head,
    transform_scale,
    transform_shorten_equal,
    transform_shorten_unit,
    verify_witness,
    zero_propagates,
    isbell_value,
)

HARD_MAX_ORDER = 6


@dataclass(frozen=True)
class EnumerationConfig:
    max_order: int
    variety_filter: Optional[VarietySignature] = None
    si_only: bool = False
    hard_cap: int = HARD_MAX_ORDER

    def __post_init__(self):
        if not 1 <= self.max_order <= self.hard_cap:
            raise ValueError(f"max_order must be in 1..{self.hard_cap}, got {self.max_order}")


@dataclass
class LawReport:
    law: str
    instances: int = 0
    counterexamples: list[str] = field(default_factory=list)
    elapsed: float = 0.0
    notes: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.counterexamples

    def record(self) -> dict:
        return {
            "law": self.law,
            "passed": self.passed,
            "instances": self.instances,
            "counterexamples": list(self.counterexamples),
            "elapsed": round(self.elapsed, 4),
            **({"notes": self.notes} if self.notes else {}),
        }

    def __str__(self) -> str:
        status = "PASS" if self.passed else f"FAIL ({len(self.counterexamples)} counterexamples)"
        return f"{self.law}: {status}, {self.instances} instances, {self.elapsed:.2f}s"


# -- enumeration ------------------------------------------------------------------


@lru_cache(maxsize=None)
def _relabelings(k: int) -> tuple[tuple[int, ...], ...]:
    """Permutations of range(k) fixing 0."""
    return tuple((0,) + p for p in permutations(range(1, k)))


def canonical_form(table) -> tuple[int, ...]:
    """Least flattened table over all relabelings fixing the neutral element 0."""
    k = len(table)
    best = None
    for pi in _relabelings(k):
        inv = [0] * k
        for x, y in enumerate(pi):
            inv[y] = x
        flat = tuple(pi[table[inv[x]][inv[y]]] for x in range(k) for y in range(k))
        if best is None or flat < best:
            best = flat
    return best


def is_canonical(table) -> bool:
    """Whether no relabeling fixing 0 gives a lexicographically smaller table."""
    k = len(table)
    for pi in _relabelings(k):
        inv = [0] * k
        for x, y in enumerate(pi):
            inv[y] = x
        for x in range(k):
            row, src = table[x], table[inv[x]]
            for y in range(k):
                v = pi[src[inv[y]]]
                if v != row[y]:
                    if v < row[y]:
                        return False
                    break
            else:
                continue
            break
    return True


def _unflatten(flat, k):
    return tuple(tuple(flat[i * k:(i + 1) * k]) for i in range(k))


def _partial_assoc_ok(t, k) -> bool:
    for x in range(1, k):
        tx = t[x]
        for y in range(1, k):
            xy = tx[y]
            if xy < 0:
                continue
            ty = t[y]
            for z in range(x, k):
                yz = ty[z]
                if yz < 0:
                    continue
                left, right = t[xy][z], tx[yz]
                if left >= 0 and right >= 0 and left != right:
                    return False
    return True


def _labeled_tables(k: int) -> Iterator[tuple[tuple[int, ...], ...]]:
    """All commutative monoid tables on range(k) with neutral 0, by backtracking."""
    t = [[-1] * k for _ in range(k)]
    for x in range(k):
        t[0][x] = t[x][0] = x
    cells = [(i, j) for i in range(1, k) for j in range(i, k)]

    def fill(pos):
        if pos == len(cells):
            yield tuple(tuple(row) for row in t)
            return
        i, j = cells[pos]
        for v in range(k):
            t[i][j] = t[j][i] = v
            if _partial_assoc_ok(t, k):
                yield from fill(pos + 1)
        t[i][j] = t[j][i] = -1

    yield from fill(0)


@lru_cache(maxsize=None)
def monoids_of_order(k: int) -> tuple[FiniteMonoid, ...]:
    """One monoid per isomorphism class, keeping tables that equal their canonical form."""
    if k < 1:
        raise ValueError("order must be positive")
    if k > HARD_MAX_ORDER:
        raise ValueError(f"order {k} exceeds enumeration cap {HARD_MAX_ORDER}")
    found = []
    for table in _labeled_tables(k):
        if is_canonical(table):
            found.append(tuple(v for row in table for v in row))
    found.sort()
    return tuple(
        FiniteMonoid(_unflatten(flat, k), 0, tuple(str(i) for i in range(k)), f"M{k}_{idx}")
        for idx, flat in enumerate(found)
    )


def _isomorphic_tables(t1, t2) -> bool:
    k = len(t1)
    return any(
        all(pi[t1[x][y]] == t2[pi[x]][pi[y]] for x in range(k) for y in range(k))
        for pi in _relabelings(k)
    )


def naive_classes(k: int) -> list[tuple[tuple[int, ...], ...]]:
    """Isomorphism class representatives by brute force over every table.

    Tries all fillings of the free entries, keeps the associative ones and
    deduplicates by explicit isomorphism search. Independent of
    :func:`canonical_form`; only practical for k <= 4.
    """
    cells = [(i, j) for i in range(1, k) for j in range(i, k)]
    reps: list = []
    for values in product(range(k), repeat=len(cells)):
        t = [[-1] * k for _ in range(k)]
        for x in range(k):
            t[0][x] = t[x][0] = x
        for (i, j), v in zip(cells, values):
            t[i][j] = t[j][i] = v
        if not all(t[t[a][b]][c] == t[a][t[b][c]] for a in range(k) for b in range(k) for c in range(k)):
            continue
        if not any(_isomorphic_tables(t, r) for r in reps):
            reps.append(t)
    return reps


def enumerate_monoids(cfg: EnumerationConfig) -> Iterator[FiniteMonoid]:
    for k in range(1, cfg.max_order + 1):
        for M in monoids_of_order(k):
            if cfg.variety_filter is not None and not satisfies(M, cfg.variety_filter):
                continue
            if cfg.si_only and not is_subdirectly_irreducible(M):
                continue
            yield M


def pinned_pair() -> tuple[FiniteMonoid, Submonoid]:
    """The nine-element monoid and its submonoid generated by <1,1,0>, <0,1,0>, <0,1,1>."""
    B = nine_element()
    gens = [triple_index(1, 1, 0), triple_index(0, 1, 0), triple_index(0, 1, 1)]
    return B, generated_submonoid(B, gens)


def enumerated_pairs(cfg: EnumerationConfig, pinned: bool = True):
    for B in enumerate_monoids(cfg):
        for A in all_submonoids(B):
            yield B, A
    if pinned:
        yield pinned_pair()


@lru_cache(maxsize=None)
def _cached_pushout_dominion(B: FiniteMonoid, A: frozenset[int]) -> frozenset[int]:
    return dominion_pushout(B, A)


def _fmt(A) -> str:
    return "{" + ",".join(map(str, sorted(A))) + "}"


# -- law checks --------------------------------------------------------------------------


def _timed(fn):
    def wrapper(*args, **kwargs):
        start = time.perf_counter()
        report = fn(*args, **kwargs)
        report.elapsed = time.perf_counter() - start
        return report

    wrapper.__name__ = fn.__name__
    wrapper.__doc__ = fn.__doc__
    return wrapper


@_timed
def check_si_dichotomy(cfg: EnumerationConfig) -> LawReport:
    """SI members of V(m,n), m >= 1: each element n-nilpotent or invertible with inverse a^(m-1)."""
    sig = cfg.variety_filter
    if sig is None or sig.m < 1:
        raise ValueError("check_si_dichotomy needs a variety filter with m >= 1")
    report = LawReport(f"si_dichotomy[{sig}]")
    for M in enumerate_monoids(EnumerationConfig(cfg.max_order, sig, True, cfg.hard_cap)):
        report.instances += 1
        for a in M.elements:
            c = classify_element(M, a)
            ok = (isinstance(c, Nilpotent) and c.degree <= sig.n) or (
                isinstance(c, Invertible) and c.inverse == M.pow(a, sig.m - 1)
            )
            if not ok:
                report.counterexamples.append(f"{M.name} element {a}: {c}")
    return report


@_timed
def check_grillet(cfg: EnumerationConfig) -> LawReport:
    """Finite SI monoids: every element is nilpotent or invertible."""
    report = LawReport("grillet")
    for M in enumerate_monoids(EnumerationConfig(cfg.max_order, cfg.variety_filter, True, cfg.hard_cap)):
        report.instances += 1
        for a in M.elements:
            if isinstance(classify_element(M, a), Neither):
                report.counterexamples.append(f"{M.name} element {a} neither nilpotent nor invertible")
    return report


@_timed
def check_idempotent_dichotomy(cfg: EnumerationConfig) -> LawReport:
    """SI monoids: an idempotent is the neutral element or the zero."""
    report = LawReport("idempotent_dichotomy")
    for M in enumerate_monoids(EnumerationConfig(cfg.max_order, cfg.variety_filter, True, cfg.hard_cap)):
        report.instances += 1
        z = find_zero(M)
        for a in M.elements:
            if M.mul(a, a) == a and a != M.neutral and a != z:
                report.counterexamples.append(f"{M.name} idempotent {a}")
    return report


def _square_cap(B: FiniteMonoid) -> int:
    return default_cap(B)


@_timed
def check_dominion_equivalence(
    cfg: EnumerationConfig, cap_policy: Callable[[FiniteMonoid], int] = _square_cap
) -> LawReport:
    """Zigzag dominion equals pushout dominion on every submonoid pair (plus the pinned pair)."""
    report = LawReport("dominion_equivalence")
    longest = 0
    for B, A in enumerated_pairs(cfg):
        report.instances += 1
        cap = cap_policy(B)
        push = _cached_pushout_dominion(B, A.universe)
        zig = set()
        for b in B.elements:
            w = search_witness(B, A.universe, b, cap)
            if w is not None:
                zig.add(b)
                longest = max(longest, w.n)
        if zig != push:
            report.counterexamples.append(
                f"{B.name} A={_fmt(A)} pushout={_fmt(push)} zigzag={_fmt(zig)} cap={cap}"
            )
    report.notes["longest_shortest_zigzag"] = longest
    return report


@_timed
def check_inverse_closure(cfg: EnumerationConfig) -> LawReport:
    """A inverse implies dominion(B, A) = A."""
    report = LawReport("inverse_closure")
    for B, A in enumerated_pairs(cfg):
        S, _ = A.as_monoid()
        if not is_inverse_monoid(S):
            continue
        report.instances += 1
        dom = _cached_pushout_dominion(B, A.universe)
        if dom != A.universe:
            report.counterexamples.append(f"{B.name} A={_fmt(A)} dominion={_fmt(dom)}")
    return report


@_timed
def check_weak_es(cfg: EnumerationConfig) -> LawReport:
    """A proper in B, B in a proper variety: dominion(B, A) != B."""
    report = LawReport("weak_es")
    for B, A in enumerated_pairs(cfg):
        if len(A) == B.order or generated_variety(B).m < 1:
            continue
        report.instances += 1
        if _cached_pushout_dominion(B, A.universe) == frozenset(B.elements):
            report.counterexamples.append(f"{B.name} A={_fmt(A)} has dominion B")
    return report


@_timed
def check_main_theorem(sig: VarietySignature, max_order: int = 4) -> LawReport:
    """Inverse varieties have no dominion escapes; noninverse ones have the pinned escape."""
    report = LawReport(f"main_theorem[{sig}]")
    if is_inverse_variety(sig):
        report.notes["inverse"] = True
        for B, A in enumerated_pairs(EnumerationConfig(max_order, sig), pinned=False):
            report.instances += 1
            dom = _cached_pushout_dominion(B, A.universe)
            if dom != A.universe:
                report.counterexamples.append(f"{B.name} A={_fmt(A)} dominion={_fmt(dom)}")
    else:
        report.notes["inverse"] = False
        if not contains(sig, C2):
            report.counterexamples.append(f"noninverse {sig} does not contain C(2)")
        B, A = pinned_pair()
        report.instances += 1
        if not satisfies(B, sig):
            report.counterexamples.append(f"nine_element not in {sig}")
        dom = _cached_pushout_dominion(B, A.universe)
        if not dom > A.universe:
            report.counterexamples.append(f"pinned pair has no escape: dominion={_fmt(dom)}")
    return report


def _sigs_for(M: FiniteMonoid) -> list[VarietySignature]:
    g = generated_variety(M)
    return [g, VarietySignature(2 * g.m, g.n), VarietySignature(g.m, g.n + 1)]


@_timed
def check_extendable_inverse(cfg: EnumerationConfig) -> LawReport:
    """On SI members of V(m,n), the extendable inverse is a^n or a^(m-1) and nothing else."""
    report = LawReport("extendable_inverse")
    for M in enumerate_monoids(EnumerationConfig(cfg.max_order, cfg.variety_filter, True, cfg.hard_cap)):
        sigs = [cfg.variety_filter] if cfg.variety_filter is not None else _sigs_for(M)
        for sig in sigs:
            if sig.m < 1:
                continue
            report.instances += 1
            for a in M.elements:
                vals = extendable_inverse(M, sig, a)
                c = classify_element(M, a)
                if isinstance(c, Invertible):
                    expected = {M.pow(a, sig.m - 1)}
                elif isinstance(c, Nilpotent) and c.degree <= sig.n:
                    expected = {M.pow(a, sig.n)}
                else:
                    expected = None
                if vals != expected:
                    report.counterexamples.append(f"{M.name} {sig} a={a}: {_fmt(vals)} expected {expected}")
    return report


@_timed
def check_isbell_functionality(cfg: EnumerationConfig, max_n: int = 2) -> LawReport:
    """Every Isbell formula defines a partial function."""
    report = LawReport("isbell_functionality")
    for M in enumerate_monoids(cfg):
        for n in range(max_n + 1):
            for args in product(M.elements, repeat=2 * n + 1):
                report.instances += 1
                vals = isbell_value(M, args)
                if len(vals) > 1:
                    report.counterexamples.append(f"{M.name} args={args}: {_fmt(vals)}")
    return report


def witness_corpus(cfg: EnumerationConfig, per_monoid: int = 12, seed: int = 0, max_n: int = 3):
    """Verified witnesses: searched ones over every submonoid pair plus random samples."""
    rng = random.Random(seed)
    out: list[ZigzagWitness] = []
    pinned = pinned_pair()
    for B in list(enumerate_monoids(cfg)) + [pinned[0]]:
        subs = all_submonoids(B) if B is not pinned[0] else [pinned[1], Submonoid(B, frozenset(B.elements))]
        for A in subs:
            for b in B.elements:
                w = search_witness(B, A.universe, b)
                if w is not None and w.n >= 1:
                    out.append(w)
        for i in range(per_monoid):
            n = 1 + i % max_n
            shape = ("any", "unit", "equal")[i % 3]
            A = rng.choice(subs)
            w = random_witness(B, n, rng, A.universe, shape=shape)
            if w is not None:
                out.append(w)
    return out


@_timed
def check_witness_transforms(cfg: EnumerationConfig, per_monoid: int = 12, seed: int = 0) -> LawReport:
    """Spine chain, zero propagation and the four witness transforms on a witness corpus."""
    report = LawReport("witness_transforms")
    counts = dict(spine_chain=0, zero=0, drop_head=0, scale=0, shorten_unit=0, shorten_equal=0)
    for w in witness_corpus(cfg, per_monoid, seed):
        report.instances += 1
        M = w.ambient
        tag = f"{M.name} {w.args}/{w.spine_z}/{w.spine_w}->{w.value}"
        try:
            spine_chain(w)
            counts["spine_chain"] += 1
        except AssertionError:
            report.counterexamples.append(f"spine_chain {tag}")
        zp = zero_propagates(w)
        if zp is not None:
            counts["zero"] += 1
            if not zp:
                report.counterexamples.append(f"zero propagation {tag}")
        outs = [("drop_head", transform_drop_head(w))]
        outs += [("scale", transform_scale(w, e)) for e in M.elements]
        if w.args[1] == M.neutral:
            outs.append(("shorten_unit", transform_shorten_unit(w)))
        inv = inverse_of(M, w.spine_w[0])
        if w.args[0] == w.args[1] and inv is not None:
            outs.append(("shorten_equal", transform_shorten_equal(w, inv)))
        for name, out in outs:
            counts[name] += 1
            if not verify_witness(out):
                report.counterexamples.append(f"{name} {tag}")
    report.notes.update(counts)
    return report


LAWS: dict[str, Callable[[EnumerationConfig], LawReport]] = {
    "grillet": check_grillet,
    "idempotent_dichotomy": check_idempotent_dichotomy,
    "dominion_equivalence": check_dominion_equivalence,
    "inverse_closure": check_inverse_closure,
    "weak_es": check_weak_es,
    "extendable_inverse": check_extendable_inverse,
    "isbell_functionality": check_isbell_functionality,
    "witness_transforms": check_witness_transforms,
    "si_dichotomy": check_si_dichotomy,
    "main_theorem": lambda cfg: check_main_theorem(cfg.variety_filter or C2, cfg.max_order),
}


def run_laws(cfg: EnumerationConfig, names: Optional[list[str]] = None) -> list[LawReport]:
    names = names or [n for n in LAWS if n != "si_dichotomy" or cfg.variety_filter is not None]
    reports = []
    for name in names:
        if name not in LAWS:
            raise KeyError(f"unknown law {name!r}; choose from {', '.join(LAWS)}")
        if name == "si_dichotomy" and (cfg.variety_filter is None or cfg.variety_filter.m < 1):
            raise ValueError("si_dichotomy needs --variety V(m,n) with m >= 1")
        reports.append(LAWS[name](cfg))
    return reports
