"""Exact integer arithmetic for (inverse) unitary cyclotomic polynomials.

The package computes the four families Phi_n, Psi_n, Phi*_n, Psi*_n by
independent exact algorithms, analyzes their coefficients (minimal-index
searches, consecutive coefficient sets, height bounds, flatness), bridges
the binary case to numerical semigroups, and verifies constructively that
every integer occurs as a coefficient in the unitary families.
"""

from .arith import (
    euler_phi,
    factorize,
    is_prime,
    is_prime_power,
    is_unitary_divisor,
    mobius,
    mobius_star,
    omega,
    prime_power_parts,
    squarefree_kernel,
    unitary_divisors,
    unitary_gcd,
    unitary_phi,
)
from .polynomial import (
    IntPolynomial,
    NonExactDivision,
    NonUnitConstantTerm,
    TruncatedSeries,
)
from .cyclotomic import (
    FAMILIES,
    InvalidBasis,
    cache_bound,
    clear_cache,
    cyclotomic,
    family_polynomial,
    inclusion_exclusion,
    inverse_cyclotomic,
    inverse_unitary_cyclotomic,
    reciprocal_series,
    unitary_cyclotomic,
    unitary_cyclotomic_kernel_product,
)
from .semigroup import (
    BinaryIdentityReport,
    IdentityViolation,
    NotNumerical,
    NumericalSemigroup,
    semigroup_polynomial,
    verify_binary_identities,
)
from .analysis import (
    CoeffRecord,
    PreconditionUnmet,
    RangeExhausted,
    congruence_transfer_check,
    height_jump_check,
    kaplan_flatness_check,
    minimal_n_table,
    psi_star_ternary_bound_check,
    ternary_consecutive_check,
)
from .witness import (
    CeilingExceeded,
    InternalMismatch,
    PredictionMismatch,
    SearchCeilingExceeded,
    WitnessPlan,
    WitnessReport,
    build_plan,
    coefficient_window_direct,
    truncated_phi_star,
    verify_witness,
)

__version__ = "0.1.0"
