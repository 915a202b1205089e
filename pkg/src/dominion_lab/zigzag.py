"""Isbell zigzags in commutative monoids.

A zigzag of length n >= 1 over args a_1..a_{2n+1}, spines z_1..z_n and
w_1..w_n, and value b is the system

    (1) b = a_1 z_1
    (2) a_1 = w_1 a_2
    (3) a_{2i} z_i = a_{2i+1} z_{i+1}        i = 1..n-1
    (4) w_i a_{2i+1} = w_{i+1} a_{2i+2}      i = 1..n-1
    (5) a_{2n} z_n = a_{2n+1}
    (6) w_n a_{2n+1} = b

and for n = 0 the single equation a_1 = b. Indices in this module are
0-based: ``args[0]`` is a_1, ``spine_z[0]`` is z_1.
"""

from __future__ import annotations

import logging
import random
from collections import deque
from dataclasses import dataclass, replace
from typing import Iterable, Optional, Sequence

from .monoid import FiniteMonoid, find_zero, inverse_of
from .morphisms import Submonoid
from .varieties import VarietySignature, satisfies

log = logging.getLogger(__name__)


class PreconditionError(ValueError):
    pass


@dataclass(frozen=True)
class ZigzagWitness:
    ambient: FiniteMonoid
    n: int
    args: tuple[int, ...]
    spine_z: tuple[int, ...]
    spine_w: tuple[int, ...]
    value: int

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("zigzag length must be nonnegative")
        if len(self.args) != 2 * self.n + 1:
            raise ValueError(f"need {2 * self.n + 1} args for n={self.n}, got {len(self.args)}")
        if len(self.spine_z) != self.n or len(self.spine_w) != self.n:
            raise ValueError(f"spines must have length n={self.n}")
        self.ambient.check(*self.args, *self.spine_z, *self.spine_w, self.value)


def first_failure(w: ZigzagWitness) -> Optional[str]:
    """Name of the first equation that fails, or None if all hold."""
    t = w.ambient.table
    a, z, d, b, n = w.args, w.spine_z, w.spine_w, w.value, w.n
    if n == 0:
        return None if a[0] == b else "(0)"
    if t[a[0]][z[0]] != b:
        return "(1)"
    if t[d[0]][a[1]] != a[0]:
        return "(2)"
    for i in range(1, n):
        # 1-based i: a_{2i} = a[2i-1], a_{2i+1} = a[2i], z_i = z[i-1]
        if t[a[2 * i - 1]][z[i - 1]] != t[a[2 * i]][z[i]]:
            return f"(3) i={i}"
    for i in range(1, n):
        if t[d[i - 1]][a[2 * i]] != t[d[i]][a[2 * i + 1]]:
            return f"(4) i={i}"
    if t[a[2 * n - 1]][z[n - 1]] != a[2 * n]:
        return "(5)"
    if t[d[n - 1]][a[2 * n]] != b:
        return "(6)"
    return None


def verify_witness(w: ZigzagWitness) -> bool:
    return first_failure(w) is None


def _require_verified(w: ZigzagWitness) -> None:
    failed = first_failure(w)
    if failed is not None:
        raise PreconditionError(f"witness fails equation {failed}")


def spine_chain(w: ZigzagWitness) -> list[tuple[int, int, int]]:
    """For m = 0..n-1 the triple (d_m a_{2m+1} z_{m+1}, b, d_{m+1} a_{2m+2} z_{m+1}).

    d_0 is the neutral element. Both outer entries equal b on every
    verified witness; a mismatch raises AssertionError.
    """
    _require_verified(w)
    if w.n < 1:
        raise PreconditionError("spine chain needs n >= 1")
    M, a, z, d = w.ambient, w.args, w.spine_z, (w.ambient.neutral,) + w.spine_w
    chain = []
    for m in range(w.n):
        left = M.prod(d[m], a[2 * m], z[m])
        right = M.prod(d[m + 1], a[2 * m + 1], z[m])
        assert left == w.value == right, f"spine chain broken at m={m}"
        chain.append((left, w.value, right))
    return chain


# -- witness transforms ----------------------------------------------------------


def transform_drop_head(w: ZigzagWitness) -> ZigzagWitness:
    _require_verified(w)
    if w.n < 1:
        raise PreconditionError("drop_head needs n >= 1")
    M = w.ambient
    head = M.mul(w.spine_w[0], w.args[2])
    return ZigzagWitness(M, w.n - 1, (head,) + w.args[3:], w.spine_z[1:], w.spine_w[1:], w.value)


def transform_scale(w: ZigzagWitness, e: int) -> ZigzagWitness:
    _require_verified(w)
    M = w.ambient
    return replace(
        w,
        args=(M.mul(e, w.args[0]),) + w.args[1:],
        spine_w=tuple(M.mul(e, d) for d in w.spine_w),
        value=M.mul(e, w.value),
    )


def transform_shorten_unit(w: ZigzagWitness) -> ZigzagWitness:
    """Length n-1 witness with arguments (a_1 a_3, a_4, ..., a_{2n+1}), given a_2 = 1."""
    _require_verified(w)
    M = w.ambient
    if w.n < 1:
        raise PreconditionError("shorten_unit needs n >= 1")
    if w.args[1] != M.neutral:
        raise PreconditionError("shorten_unit needs a_2 to be the neutral element")
    out = transform_drop_head(w)
    # a_1 = w_1 a_2 = w_1, so the new head w_1 a_3 is a_1 a_3
    assert out.args[0] == M.mul(w.args[0], w.args[2])
    return out


def transform_shorten_equal(w: ZigzagWitness, d1_inverse: int) -> ZigzagWitness:
    """Length n-1 witness with arguments (a_3, ..., a_{2n+1}), given a_1 = a_2 and w_1 invertible."""
    _require_verified(w)
    M = w.ambient
    if w.n < 1:
        raise PreconditionError("shorten_equal needs n >= 1")
    if w.args[0] != w.args[1]:
        raise PreconditionError("shorten_equal needs a_1 = a_2")
    if M.mul(w.spine_w[0], d1_inverse) != M.neutral:
        raise PreconditionError("d1_inverse is not an inverse of w_1")
    out = ZigzagWitness(
        M,
        w.n - 1,
        w.args[2:],
        w.spine_z[1:],
        tuple(M.mul(d1_inverse, d) for d in w.spine_w[1:]),
        w.value,
    )
    # same witness as scaling the dropped-head witness by the inverse
    assert out == transform_scale(transform_drop_head(w), d1_inverse)
    return out


# -- search ------------------------------------------------------------------------


def default_cap(B: FiniteMonoid) -> int:
    return B.order ** 2


def search_witness(
    B: FiniteMonoid, A: Submonoid | Iterable[int], b: int, cap: Optional[int] = None
) -> Optional[ZigzagWitness]:
    """Shortest zigzag over A with value b and length <= cap, or None.

    Breadth-first search over states (r, w) where r = a_{2i} z_i is the
    current right product and w = w_i the current left spine entry; the
    remaining equations depend only on that pair. Each state is expanded
    once, so there are at most |B|^2 of them and a shortest witness, if
    any, has length at most |B|^2.
    """
    A = frozenset(A)
    B.check(b, *A)
    if cap is None:
        cap = default_cap(B)
    t = B.table
    if b in A:
        return ZigzagWitness(B, 0, (b,), (), (), b)
    if cap < 1:
        return None
    As = sorted(A)
    # divisors[r][a] = [z : a z = r];  factors[s] = [(w, a) : w a = s, a in A]
    divisors = [[[z for z in B.elements if t[a][z] == r] for a in range(B.order)] for r in B.elements]
    factors: list[list[tuple[int, int]]] = [[] for _ in B.elements]
    for w in B.elements:
        for a in As:
            factors[t[w][a]].append((w, a))

    parent: dict[tuple[int, int], tuple] = {}
    frontier = []
    for z1 in B.elements:
        for a1 in As:
            if t[a1][z1] != b:
                continue
            for w1, a2 in factors[a1]:
                state = (t[a2][z1], w1)
                if state not in parent:
                    parent[state] = (None, a1, z1, w1, a2)
                    frontier.append(state)

    depth = 1
    while frontier:
        for state in frontier:
            r, w = state
            if r in A and t[w][r] == b:
                return _rebuild(B, parent, state, b)
        if depth >= cap:
            return None
        nxt = []
        for state in frontier:
            r, w = state
            for a_odd in As:
                zs = divisors[r][a_odd]
                if not zs:
                    continue
                for w_next, a_even in factors[t[w][a_odd]]:
                    for z_next in zs:
                        new = (t[a_even][z_next], w_next)
                        if new not in parent:
                            parent[new] = (state, a_odd, z_next, w_next, a_even)
                            nxt.append(new)
        frontier = nxt
        depth += 1
    return None


def _rebuild(B, parent, state, b) -> ZigzagWitness:
    steps = []
    final_r = state[0]
    while state is not None:
        prev, a_odd, z, w, a_even = parent[state]
        steps.append((a_odd, z, w, a_even))
        state = prev
    steps.reverse()
    args, zs, ws = [], [], []
    for a_odd, z, w, a_even in steps:
        args += [a_odd, a_even]
        zs.append(z)
        ws.append(w)
    args.append(final_r)
    wit = ZigzagWitness(B, len(steps), tuple(args), tuple(zs), tuple(ws), b)
    assert verify_witness(wit), "search produced an invalid witness"
    return wit


# -- Isbell values -------------------------------------------------------------------


def _spine_sets(B: FiniteMonoid, args: Sequence[int]):
    """Feasible z_1 values and reachable w_n values for fixed arguments."""
    t, n, a = B.table, (len(args) - 1) // 2, args
    # backward over the z-chain: equations (5) then (3)
    zs = [None] * n
    zs[n - 1] = {z for z in B.elements if t[a[2 * n - 1]][z] == a[2 * n]}
    for i in range(n - 1, 0, -1):
        targets = {t[a[2 * i]][z] for z in zs[i]}
        zs[i - 1] = {z for z in B.elements if t[a[2 * i - 1]][z] in targets}
    # forward over the w-chain: equations (2) then (4)
    ws = [None] * n
    ws[0] = {w for w in B.elements if t[w][a[1]] == a[0]}
    for i in range(1, n):
        sources = {t[w][a[2 * i]] for w in ws[i - 1]}
        ws[i] = {w for w in B.elements if t[w][a[2 * i + 1]] in sources}
    return zs, ws


def isbell_value(B: FiniteMonoid, args: Sequence[int]) -> set[int]:
    """All b for which some spine completes a zigzag on ``args``.

    On a commutative monoid this set has at most one element; a larger
    set is logged as a falsification event and returned unchanged.
    """
    if len(args) % 2 != 1:
        raise ValueError("isbell_value needs an odd number of arguments")
    B.check(*args)
    if len(args) == 1:
        return {args[0]}
    t, n = B.table, (len(args) - 1) // 2
    zs, ws = _spine_sets(B, args)
    left = {t[args[0]][z] for z in zs[0]}
    right = {t[w][args[2 * n]] for w in ws[n - 1]}
    values = left & right
    if len(values) > 1:
        log.warning("isbell_value not functional on %s args=%s: %s", B.name, tuple(args), values)
    return values


def isbell_witness(B: FiniteMonoid, args: Sequence[int], b: int) -> Optional[ZigzagWitness]:
    """A witness with the given args and value b, or None."""
    if len(args) == 1:
        return ZigzagWitness(B, 0, (args[0],), (), (), b) if args[0] == b else None
    t, n, a = B.table, (len(args) - 1) // 2, tuple(args)
    zs, ws = _spine_sets(B, a)
    z_chain = []
    cands = [z for z in sorted(zs[0]) if t[a[0]][z] == b]
    for i in range(n):
        if not cands:
            return None
        z = cands[0]
        z_chain.append(z)
        if i + 1 < n:
            cands = [y for y in sorted(zs[i + 1]) if t[a[2 * i + 1]][z] == t[a[2 * i + 2]][y]]
    w_chain = []
    cands = [w for w in sorted(ws[n - 1]) if t[w][a[2 * n]] == b]
    for i in range(n - 1, -1, -1):
        if not cands:
            return None
        w = cands[0]
        w_chain.append(w)
        if i > 0:
            cands = [v for v in sorted(ws[i - 1]) if t[v][a[2 * i]] == t[w][a[2 * i + 1]]]
    wit = ZigzagWitness(B, n, a, tuple(z_chain), tuple(reversed(w_chain)), b)
    assert verify_witness(wit)
    return wit


def extendable_inverse(M: FiniteMonoid, sig: VarietySignature, a: int) -> set[int]:
    """{ b : a^(n+1) b = a^n and b^2 a = b } for sig = V(m, n)."""
    if sig.m < 1:
        raise ValueError("extendable_inverse needs m >= 1")
    if not satisfies(M, sig):
        raise ValueError(f"{M.name} is not in {sig}")
    t = M.table
    an, an1 = M.pow(a, sig.n), M.pow(a, sig.n + 1)
    return {b for b in M.elements if t[an1][b] == an and t[t[b][b]][a] == b}


# -- random witnesses ------------------------------------------------------------------


def random_witness(
    B: FiniteMonoid,
    n: int,
    rng: random.Random,
    A: Optional[Iterable[int]] = None,
    shape: str = "any",
    tries: int = 200,
) -> Optional[ZigzagWitness]:
    """Sample a verified zigzag of length n >= 1 with args drawn from A.

    Each argument/spine pair is drawn uniformly from the solutions of the
    next equation; the closing equation (6) is met by rejection.
    ``shape`` biases the head: ``"unit"`` forces a_2 = 1, ``"equal"``
    forces a_1 = a_2 with w_1 invertible.
    """
    t = B.table
    As = sorted(A) if A is not None else list(B.elements)
    pairs_into = [[(x, y) for x in B.elements for y in As if t[x][y] == s] for s in B.elements]
    arg_divides = [[(x, z) for x in As for z in B.elements if t[x][z] == s] for s in B.elements]
    units = [u for u in B.elements if inverse_of(B, u) is not None]
    for _ in range(tries):
        a1, z1 = rng.choice(As), rng.choice(list(B.elements))
        b = t[a1][z1]
        if shape == "unit":
            if B.neutral not in As:
                return None
            w1, a2 = a1, B.neutral
        elif shape == "equal":
            opts = [u for u in units if t[u][a1] == a1]
            if not opts:
                continue
            w1, a2 = rng.choice(opts), a1
        else:
            w1, a2 = rng.choice(pairs_into[a1])
        args, zs, ws = [a1, a2], [z1], [w1]
        for _i in range(1, n):
            r = t[args[-1]][zs[-1]]
            choices = arg_divides[r]
            if not choices:
                break
            a_odd, z_next = rng.choice(choices)
            fac = pairs_into[t[ws[-1]][a_odd]]
            if not fac:
                break
            w_next, a_even = rng.choice(fac)
            args += [a_odd, a_even]
            zs.append(z_next)
            ws.append(w_next)
        else:
            last = t[args[-1]][zs[-1]]
            if last in As and t[ws[-1]][last] == b:
                wit = ZigzagWitness(B, n, tuple(args + [last]), tuple(zs), tuple(ws), b)
                assert verify_witness(wit)
                return wit
    return None


def zero_propagates(w: ZigzagWitness) -> Optional[bool]:
    """True/False if some argument is the zero element, else None."""
    z = find_zero(w.ambient)
    if z is None or z not in w.args:
        return None
    return w.value == z
