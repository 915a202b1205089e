"""Dominions from the amalgamated pushout B *_A B, cross-checked by zigzag search."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional

from .monoid import FiniteMonoid, direct_product
from .morphisms import (
    Congruence,
    Homomorphism,
    Submonoid,
    enumerate_homomorphisms,
    generated_congruence,
    quotient,
)
from .zigzag import ZigzagWitness, default_cap, search_witness


class DominionDiscrepancy(RuntimeError):
    def __init__(self, element: int, cap: int, in_pushout: bool):
        side = "pushout only" if in_pushout else "zigzag only"
        super().__init__(f"dominion methods disagree on element {element} ({side}, cap={cap})")
        self.element = element
        self.cap = cap
        self.in_pushout = in_pushout


def coproduct_pair(B: FiniteMonoid) -> tuple[FiniteMonoid, Homomorphism, Homomorphism]:
    """B x B with the injections b -> (b, 1) and b -> (1, b)."""
    P = direct_product(B, B, name=f"{B.name}*{B.name}")
    k, e = B.order, B.neutral
    inj1 = Homomorphism(B, P, tuple(b * k + e for b in B.elements))
    inj2 = Homomorphism(B, P, tuple(e * k + b for b in B.elements))
    return P, inj1, inj2


@dataclass(frozen=True)
class PushoutResult:
    monoid: FiniteMonoid
    p1: Homomorphism
    p2: Homomorphism
    congruence: Congruence = field(repr=False)

    def pair_class(self, b1: int, b2: int) -> int:
        """The class of (b1, b2) in the quotient."""
        return self.p1.target.table[self.p1(b1)][self.p2(b2)]


def pushout_over(B: FiniteMonoid, A: Submonoid | Iterable[int]) -> PushoutResult:
    A = frozenset(A)
    P, inj1, inj2 = coproduct_pair(B)
    theta = generated_congruence(P, [(inj1(a), inj2(a)) for a in sorted(A)])
    Q, proj = quotient(P, theta, name=f"{B.name}*_A{B.name}")
    return PushoutResult(Q, inj1.compose(proj), inj2.compose(proj), theta)


def dominion_pushout(B: FiniteMonoid, A: Submonoid | Iterable[int]) -> frozenset[int]:
    po = pushout_over(B, A)
    return frozenset(b for b in B.elements if po.p1(b) == po.p2(b))


def dominion_zigzag(
    B: FiniteMonoid, A: Submonoid | Iterable[int], cap: Optional[int] = None
) -> frozenset[int]:
    A = frozenset(A)
    return frozenset(b for b in B.elements if search_witness(B, A, b, cap) is not None)


@dataclass(frozen=True)
class DominionReport:
    ambient: FiniteMonoid
    sub: frozenset[int]
    elements: frozenset[int]
    method: str
    witnesses: dict[int, ZigzagWitness] = field(default_factory=dict, compare=False)

    @property
    def escapes(self) -> frozenset[int]:
        return self.elements - self.sub

    @property
    def closed(self) -> bool:
        return self.elements == self.sub


def dominion(
    B: FiniteMonoid,
    A: Submonoid | Iterable[int],
    method: str = "both",
    cap: Optional[int] = None,
) -> DominionReport:
    """Dominion of A in B by ``pushout``, ``zigzag`` or ``both``.

    With ``both`` the two sets must agree; otherwise
    :class:`DominionDiscrepancy` is raised for the first differing element.
    """
    A = frozenset(A)
    if method not in ("both", "pushout", "zigzag"):
        raise ValueError(f"unknown method {method!r}")
    if cap is None:
        cap = default_cap(B)
    witnesses = {}
    via_push = via_zig = None
    if method in ("both", "pushout"):
        via_push = dominion_pushout(B, A)
    if method in ("both", "zigzag"):
        for b in B.elements:
            w = search_witness(B, A, b, cap)
            if w is not None:
                witnesses[b] = w
        via_zig = frozenset(witnesses)
    if via_push is not None and via_zig is not None and via_push != via_zig:
        b = min(via_push ^ via_zig)
        raise DominionDiscrepancy(b, cap, b in via_push)
    elements = via_push if via_push is not None else via_zig
    return DominionReport(B, A, elements, method, witnesses)


def separated_elements(
    B: FiniteMonoid, A: Iterable[int], targets: Iterable[FiniteMonoid], cap: int = 10_000
) -> frozenset[int]:
    """Elements of B told apart by some pair g, h : B -> C agreeing on A.

    Only an under-approximation of the complement of the dominion, since
    only the given targets are tried.
    """
    A = frozenset(A)
    out = set()
    for C in targets:
        homs = enumerate_homomorphisms(B, C, cap)
        for g in homs:
            for h in homs:
                if all(g(a) == h(a) for a in A):
                    out.update(b for b in B.elements if g(b) != h(b))
    return frozenset(out)


def induced_map(po: PushoutResult, g: Homomorphism, h: Homomorphism) -> Optional[Homomorphism]:
    """The map class(b1, b2) -> g(b1) h(b2), or None if not well defined."""
    B, C, Q = g.source, g.target, po.monoid
    img = [-1] * Q.order
    for b1 in B.elements:
        for b2 in B.elements:
            q = po.pair_class(b1, b2)
            v = C.table[g(b1)][h(b2)]
            if img[q] == -1:
                img[q] = v
            elif img[q] != v:
                return None
    return Homomorphism(Q, C, tuple(img))
