"""Acceptance criteria, one test each, exact equality throughout.

Each test prints a single ``criterion N: PASS|FAIL ...`` line. Run
``pytest tests/test_acceptance.py -s`` to see them inline, or
``python3 tests/test_acceptance.py`` for the bare summary.
"""

import sys
import time

import pytest

from dominion_lab.laws import (
    EnumerationConfig,
    check_dominion_equivalence,
    check_extendable_inverse,
    check_grillet,
    check_idempotent_dichotomy,
    check_inverse_closure,
    check_isbell_functionality,
    check_si_dichotomy,
    check_weak_es,
    check_witness_transforms,
    monoids_of_order,
    naive_classes,
    pinned_pair,
)
from dominion_lab.monoid import is_inverse_monoid, nine_element, triple_index as T, validate
from dominion_lab.morphisms import is_subdirectly_irreducible
from dominion_lab.pushout import dominion
from dominion_lab.varieties import VarietySignature as V, satisfies
from dominion_lab.zigzag import ZigzagWitness, isbell_value, verify_witness


def crit_1():
    start = time.perf_counter()
    B = nine_element()
    validate(B.table, B.neutral)
    si = is_subdirectly_irreducible(B)
    blocks = si.monolith.blocks() if si.si else None
    expected = [[x] for x in range(7)] + [[T(1, 1, 1), 8]]
    elapsed = time.perf_counter() - start
    ok = (
        B.order == 9
        and satisfies(B, V(1, 2))
        and si.si
        and blocks == expected
        and not is_inverse_monoid(B)
        and elapsed < 1
    )
    return ok, f"order {B.order}, monolith {blocks}, {elapsed:.3f}s"


def crit_2():
    start = time.perf_counter()
    B, A = pinned_pair()
    args = (T(1, 1, 0), T(0, 1, 0), T(0, 1, 1))
    w = ZigzagWitness(B, 1, args, (T(0, 0, 1),), (T(1, 0, 0),), T(1, 1, 1))
    vals = isbell_value(B, args)
    dom = dominion(B, A).elements
    elapsed = time.perf_counter() - start
    ok = verify_witness(w) and vals == {T(1, 1, 1)} and len(A) == 5 and dom > A.universe and elapsed < 1
    return ok, f"value {sorted(vals)}, dominion {sorted(dom)} over {sorted(A.universe)}, {elapsed:.3f}s"


def crit_3():
    r = check_dominion_equivalence(EnumerationConfig(4))
    ok = r.passed and r.instances > 0 and r.elapsed < 300
    return ok, f"{r}; longest shortest zigzag {r.notes['longest_shortest_zigzag']}"


def crit_4():
    sigs = [(1, 1), (1, 2), (2, 1), (2, 2), (3, 1)]
    reports = [check_si_dichotomy(EnumerationConfig(5, V(m, n))) for m, n in sigs]
    bad = [c for r in reports for c in r.counterexamples]
    detail = "; ".join(f"{r.law} {r.instances} SI" for r in reports)
    return not bad, detail + (f"; counterexamples {bad[:5]}" if bad else "")


def crit_5():
    cfg = EnumerationConfig(5)
    g, i = check_grillet(cfg), check_idempotent_dichotomy(cfg)
    return g.passed and i.passed and g.instances > 0, f"{g}; {i}"


def crit_6():
    cfg = EnumerationConfig(4)
    inv, wes = check_inverse_closure(cfg), check_weak_es(cfg)
    return inv.passed and wes.passed and inv.instances > 0 and wes.instances > 0, f"{inv}; {wes}"


def crit_7():
    r = check_witness_transforms(EnumerationConfig(5), per_monoid=24, seed=0)
    n = r.notes
    ok = (
        r.passed
        and r.instances >= 1000
        and n["spine_chain"] == r.instances
        and n["zero"] > 0
        and n["shorten_unit"] > 0
        and n["shorten_equal"] > 0
    )
    return ok, f"{r}; {n}"


def crit_8():
    r = check_extendable_inverse(EnumerationConfig(5))
    return r.passed and r.instances > 0, str(r)


def crit_9():
    r = check_isbell_functionality(EnumerationConfig(4), max_n=2)
    return r.passed and r.instances > 0, str(r)


def crit_10():
    start = time.perf_counter()
    canon = [len(monoids_of_order(k)) for k in range(1, 5)]
    naive = [len(naive_classes(k)) for k in range(1, 5)]
    elapsed = time.perf_counter() - start
    return canon == naive and elapsed < 60, f"canonical {canon}, naive {naive}, {elapsed:.2f}s"


CRITERIA = [crit_1, crit_2, crit_3, crit_4, crit_5, crit_6, crit_7, crit_8, crit_9, crit_10]


def _line(i, ok, detail):
    return f"criterion {i}: {'PASS' if ok else 'FAIL'} - {detail}"


@pytest.mark.parametrize("i", range(1, 11))
def test_criterion(i, capsys):
    ok, detail = CRITERIA[i - 1]()
    with capsys.disabled():
        print("\n" + _line(i, ok, detail))
    assert ok, detail


if __name__ == "__main__":
    results = [CRITERIA[i - 1]() for i in range(1, 11)]
    for i, (ok, detail) in enumerate(results, 1):
        print(_line(i, ok, detail))
    sys.exit(0 if all(ok for ok, _ in results) else 1)
