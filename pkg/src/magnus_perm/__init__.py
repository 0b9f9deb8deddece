"""
Exact Magnus expansion terms via the Hopf algebra of permutations.

The word form of ``Ω_n`` lives in :mod:`magnus_perm.magnus`, the products and
coproducts of permutations in :mod:`magnus_perm.hopf`, BCH terms in
:mod:`magnus_perm.bch`, and the matrix-valued checks in :mod:`magnus_perm.numerics`.
"""
from .bch import bch_words
from .hopf import coproduct, coproduct_prime, counit, pairing, shuffle, star, star_prime, theta
from .magnus import (
    NotDecomposableError,
    RNestedCombination,
    ResourceLimitError,
    dragt_forest_extract,
    dsw_project,
    expand_rnested,
    neumann_P,
    omega_rnested,
    omega_via_log,
    omega_word,
)
from .perm import (
    Combination,
    InvalidWordError,
    ascents,
    descents,
    inverse,
    restrict,
    shift,
    standardize,
)

__version__ = "0.1.0"
