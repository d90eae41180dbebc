"""Squarefree monomial ideals: Betti tables, linear presentation and regularity bounds."""

from ._core import (
    CapacityError,
    Ideal,
    InputError,
    InternalError,
    PreconditionError,
    ResumeError,
    TheoremViolation,
    add_generator,
    alexander_dual,
    betti_numbers,
    betti_table,
    check_cd_bound,
    check_regularity_bound,
    cohomological_dimension,
    f_bound,
    faltings_bound,
    g_bound,
    gcd_lemma_sweep,
    gcd_witness,
    golden_suite,
    height_profile,
    ideal_intersection,
    ideal_sum,
    is_n2,
    is_nk,
    is_s2,
    projective_dimension,
    reduced_homology,
    regularity,
    regularity_bound,
    remark_example,
    sharp_example,
    truncation,
    verify_range,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
