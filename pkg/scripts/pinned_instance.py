"""Walk through the nine-element example: SI status, the zigzag, and the pushout dominion."""

from dominion_lab.laws import pinned_pair
from dominion_lab.morphisms import is_subdirectly_irreducible
from dominion_lab.pushout import dominion, pushout_over
from dominion_lab.textio import dump_congruence, dump_witness
from dominion_lab.varieties import generated_variety
from dominion_lab.zigzag import isbell_value, search_witness


def main():
    B, A = pinned_pair()
    si = is_subdirectly_irreducible(B)
    print(f"B: order {B.order}, variety {generated_variety(B)}, SI {si.si}")
    print(dump_congruence(si.monolith, "monolith"))
    print("A =", sorted(A.universe), [B.label(a) for a in sorted(A.universe)])
    top = B.labels.index("111")
    w = search_witness(B, A.universe, top)
    print(dump_witness(w))
    print("isbell value of", w.args, "=", isbell_value(B, w.args))
    po = pushout_over(B, A)
    print(f"pushout order {po.monoid.order}; p1 = p2 on", sorted(b for b in B.elements if po.p1(b) == po.p2(b)))
    rep = dominion(B, A)
    print("escapes:", [B.label(b) for b in sorted(rep.escapes)])


if __name__ == "__main__":
    main()
