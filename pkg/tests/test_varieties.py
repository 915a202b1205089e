import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import SMALL, small_monoids
from dominion_lab.monoid import cyclic, direct_product, monogenic, nine_element, trivial
from dominion_lab.morphisms import enumerate_homomorphisms
from dominion_lab.varieties import (
    C2,
    CM,
    VarietySignature as V,
    contains,
    generated_variety,
    is_inverse_variety,
    same_variety,
    satisfies,
    variety_core,
)

sigs = st.builds(V, st.integers(1, 6), st.integers(0, 4))


def test_parse():
    assert V.parse("V(2, 3)") == V(2, 3)
    assert V.parse("A(4)") == V(4, 0)
    assert V.parse("C(2)") == V(1, 2) == C2
    assert V.parse("CM") == CM
    assert str(V(3, 1)) == "V(3,1)"
    with pytest.raises(ValueError):
        V.parse("W(1,2)")
    with pytest.raises(ValueError):
        V(-1, 0)


def test_satisfies_examples():
    assert satisfies(nine_element(), V(1, 2))
    assert not satisfies(nine_element(), V(1, 1))
    assert satisfies(cyclic(3), V(3, 0))
    assert not satisfies(cyclic(3), V(2, 0))
    assert all(satisfies(trivial(), V(m, n)) for m in range(4) for n in range(4))


def test_generated_variety_examples():
    assert generated_variety(nine_element()) == V(1, 2)
    assert generated_variety(cyclic(6)) == V(6, 0)
    assert generated_variety(monogenic(3, 2)) == V(2, 3)
    assert generated_variety(direct_product(cyclic(2), cyclic(3))) == V(6, 0)


@given(small_monoids())
def test_generated_variety_is_least(M):
    g = generated_variety(M)
    assert satisfies(M, g)
    if g.m > 1:
        for d in range(1, g.m):
            if g.m % d == 0:
                assert not satisfies(M, V(d, g.n))
    if g.n > 0:
        assert not satisfies(M, V(g.m, g.n - 1))


def test_contains_examples():
    assert contains(V(1, 2), V(1, 1))
    assert contains(V(6, 1), V(3, 0))
    assert not contains(V(3, 0), V(2, 0))
    assert not contains(V(1, 1), C2)
    assert contains(CM, V(4, 4)) and not contains(V(4, 4), CM)
    assert same_variety(V(2, 1), V(2, 1))


@given(sigs, sigs)
def test_contains_matches_divisibility(outer, inner):
    expected = outer.m % inner.m == 0 and outer.n >= inner.n
    assert contains(outer, inner) == expected


@given(sigs, small_monoids())
def test_containment_transfers_membership(sig, M):
    g = generated_variety(M)
    assert satisfies(M, sig) == contains(sig, g)


@given(sigs)
def test_inverse_variety(sig):
    assert is_inverse_variety(sig) == (sig.n <= 1)


def test_inverse_variety_examples():
    assert is_inverse_variety(V(3, 1)) and is_inverse_variety(V(5, 0))
    assert not is_inverse_variety(C2) and not is_inverse_variety(CM)


def test_variety_core_examples():
    assert variety_core(monogenic(3, 1), V(1, 2)).universe == {0, 2, 3}
    assert variety_core(cyclic(4), V(2, 0)).universe == {0, 2}
    assert variety_core(nine_element(), CM).universe == set(range(9))


@pytest.mark.parametrize("M", SMALL[:12], ids=lambda M: M.name)
@pytest.mark.parametrize("sig", [V(1, 1), V(2, 1), V(1, 2)], ids=str)
def test_core_is_submonoid_and_maximal(M, sig):
    core = variety_core(M, sig).universe
    S, _ = variety_core(M, sig).as_monoid()
    assert satisfies(S, sig)
    # images of homs from members of the variety land in the core
    for src in (monogenic(sig.n, sig.m), cyclic(sig.m)):
        for h in enumerate_homomorphisms(src, M):
            assert h.image() <= core


def test_m_zero_signatures_are_cm():
    assert contains(V(0, 5), V(7, 3))
    assert not contains(V(2, 1), C2)
    assert same_variety(V(0, 5), CM)
    assert variety_core(nine_element(), V(0, 3)).universe == set(range(9))
    assert not is_inverse_variety(V(0, 0))
    assert generated_variety(monogenic(2, 3)) == V(3, 2)
