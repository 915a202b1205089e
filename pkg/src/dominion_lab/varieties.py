"""Varieties V(m,n) of commutative monoids, axiomatized by x^(m+n) = x^n."""

from __future__ import annotations

import re
from dataclasses import dataclass
from math import lcm

from .monoid import FiniteMonoid, monogenic
from .morphisms import Submonoid


@dataclass(frozen=True, order=True)
class VarietySignature:
    m: int
    n: int

    def __post_init__(self):
        if self.m < 0 or self.n < 0:
            raise ValueError("variety signature needs m, n >= 0")

    def __str__(self) -> str:
        return f"V({self.m},{self.n})"

    @classmethod
    def parse(cls, text: str) -> "VarietySignature":
        """Accepts ``V(m,n)``, ``A(n)`` = V(n,0), ``C(n)`` = V(1,n) and ``CM``."""
        s = text.replace(" ", "")
        if s == "CM":
            return cls(0, 0)
        if mt := re.fullmatch(r"V\((\d+),(\d+)\)", s):
            return cls(int(mt[1]), int(mt[2]))
        if mt := re.fullmatch(r"A\((\d+)\)", s):
            return cls(int(mt[1]), 0)
        if mt := re.fullmatch(r"C\((\d+)\)", s):
            return cls(1, int(mt[1]))
        raise ValueError(f"cannot parse variety signature {text!r}")


CM = VarietySignature(0, 0)
C2 = VarietySignature(1, 2)


def satisfies(M: FiniteMonoid, sig: VarietySignature) -> bool:
    return all(M.pow(a, sig.m + sig.n) == M.pow(a, sig.n) for a in M.elements)


def index_and_period(M: FiniteMonoid, a: int) -> tuple[int, int]:
    """Least i >= 0 and p >= 1 with a^(i+p) = a^i."""
    seen: dict[int, int] = {}
    x, k = M.neutral, 0
    while x not in seen:
        seen[x] = k
        x = M.table[x][a]
        k += 1
    i = seen[x]
    return i, k - i


def generated_variety(M: FiniteMonoid) -> VarietySignature:
    m, n = 1, 0
    for a in M.elements:
        i, p = index_and_period(M, a)
        m = lcm(m, p)
        n = max(n, i)
    return VarietySignature(m, n)


def contains(outer: VarietySignature, inner: VarietySignature) -> bool:
    """Whether V(inner) is a subvariety of V(outer).

    One-variable identities are decided on the free 1-generated member
    of the inner variety, which is monogenic(n', m').
    """
    if inner.m == 0:
        return outer.m == 0
    return satisfies(monogenic(inner.n, inner.m), outer)


def same_variety(s1: VarietySignature, s2: VarietySignature) -> bool:
    return contains(s1, s2) and contains(s2, s1)


def is_inverse_variety(sig: VarietySignature) -> bool:
    direct = sig.m >= 1 and sig.n <= 1
    via_c2 = not contains(sig, C2)
    assert direct == via_c2, f"inverse-variety formulations disagree on {sig}"
    return direct


def variety_core(M: FiniteMonoid, sig: VarietySignature) -> Submonoid:
    """The submonoid of elements satisfying the signature's identity."""
    if sig.m == 0:
        return Submonoid(M, frozenset(M.elements))
    e = sig.m + sig.n
    return Submonoid(M, frozenset(a for a in M.elements if M.pow(a, e) == M.pow(a, sig.n)))
