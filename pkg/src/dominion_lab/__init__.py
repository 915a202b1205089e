"""Exact computations on finite commutative monoids: varieties, subdirect
irreducibility, Isbell zigzags and dominions."""

from .monoid import (
    FiniteMonoid,
    Invertible,
    MonoidLawError,
    Neither,
    Nilpotent,
    classify_element,
    cyclic,
    direct_product,
    find_zero,
    is_cancellative_element,
    is_inverse_monoid,
    monogenic,
    nine_element,
    subuniverse_generate,
    trivial,
    validate,
)
from .morphisms import (
    Congruence,
    Homomorphism,
    Submonoid,
    enumerate_homomorphisms,
    generated_congruence,
    is_subdirectly_irreducible,
    quotient,
)
from .pushout import dominion, dominion_pushout, dominion_zigzag, pushout_over
from .varieties import VarietySignature, contains, generated_variety, satisfies, variety_core
from .zigzag import ZigzagWitness, isbell_value, search_witness, verify_witness

__version__ = "0.1.0"
