import pytest

from dominion_lab.laws import (
    LAWS,
    EnumerationConfig,
    LawReport,
    canonical_form,
    check_main_theorem,
    check_witness_transforms,
    enumerate_monoids,
    is_canonical,
    monoids_of_order,
    naive_classes,
    run_laws,
)
from dominion_lab.monoid import validate
from dominion_lab.morphisms import is_isomorphic
from dominion_lab.varieties import VarietySignature as V


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_canonical_matches_naive(k):
    assert len(monoids_of_order(k)) == len(naive_classes(k))


def test_enumerated_classes_pairwise_distinct():
    for k in range(1, 5):
        ms = monoids_of_order(k)
        for M in ms:
            validate(M.table, M.neutral)
        for i, M in enumerate(ms):
            assert not any(is_isomorphic(M, N) for N in ms[i + 1:])


def test_canonical_form_agrees_with_is_canonical():
    for M in monoids_of_order(4):
        assert is_canonical(M.table)
        assert canonical_form(M.table) == tuple(v for row in M.table for v in row)


def test_config_bounds():
    with pytest.raises(ValueError):
        EnumerationConfig(0)
    with pytest.raises(ValueError):
        EnumerationConfig(7)
    with pytest.raises(ValueError):
        monoids_of_order(7)


def test_filters():
    cfg = EnumerationConfig(4, V(1, 1), si_only=True)
    names = [M.name for M in enumerate_monoids(cfg)]
    assert names and all(M.name in names for M in enumerate_monoids(cfg))
    assert len(list(enumerate_monoids(EnumerationConfig(3)))) == sum(len(monoids_of_order(k)) for k in (1, 2, 3))


def test_run_all_laws_order3():
    reports = run_laws(EnumerationConfig(3))
    assert {r.law for r in reports} >= {"grillet", "dominion_equivalence", "witness_transforms"}
    for r in reports:
        assert r.passed, str(r)
        assert r.record()["passed"]


def test_si_dichotomy_requires_variety():
    with pytest.raises(ValueError):
        run_laws(EnumerationConfig(3), ["si_dichotomy"])
    (r,) = run_laws(EnumerationConfig(4, V(2, 1)), ["si_dichotomy"])
    assert r.passed and r.instances > 0


def test_main_theorem_both_branches():
    inv = check_main_theorem(V(2, 1), max_order=3)
    assert inv.passed and inv.notes["inverse"] and inv.instances > 0
    non = check_main_theorem(V(1, 2))
    assert non.passed and non.notes["inverse"] is False


def test_witness_transform_counts():
    r = check_witness_transforms(EnumerationConfig(3))
    assert r.passed
    assert r.notes["shorten_unit"] > 0 and r.notes["shorten_equal"] > 0 and r.notes["zero"] > 0


def test_report_formatting():
    r = LawReport("x", instances=2, counterexamples=["a"])
    assert not r.passed and "FAIL (1 counterexamples)" in str(r)
    assert set(LAWS) >= {"grillet", "si_dichotomy", "main_theorem"}


def test_nine_element_si_dichotomy_classification():
    from dominion_lab.monoid import Nilpotent, classify_element, nine_element, triple_index

    B = nine_element()
    assert classify_element(B, triple_index(1, 1, 1)) == Nilpotent(2)
    for a in B.elements:
        c = classify_element(B, a)
        assert isinstance(c, Nilpotent) and c.degree <= 2 or a == B.neutral
