"""Exact-arithmetic toolkit for form rings, Bak-style quadratic groups with
certificate words, excision/double-ring algebra, reductions to hyperbolic
form, truncated-polynomial unit factorization, and graded dilation."""

from .errors import (
    BadParameter,
    ConditionViolated,
    ConstraintViolated,
    DegreeError,
    DimensionMismatch,
    FormK1Error,
    HypothesisFailed,
    KNotInvertible,
    MalformedWord,
    NotAUnit,
    NotCongruent,
    NotHermitian,
    NotInvertible,
    NotNilpotent,
    NotQuadratic,
    ParameterNotInIdeal,
    ParseError,
    PreconditionFailed,
    Undecidable,
)
from .excision import (
    double_iso_f,
    double_iso_g,
    double_ring_ops,
    excision_mul,
    fold,
    fold_matrix,
    integral_pair_identity,
    lift_relative_word,
    relative_level,
    seq_i,
    seq_p2,
)
from .forms import (
    FormParameter,
    explicit_param,
    form_param_extend_poly,
    form_param_validate,
    gamma_plus,
    lambda_max,
    lambda_min,
    lambda_prime,
)
from .gq import (
    BlockGen,
    ElemGen,
    RelGen,
    Word,
    elem_gen_eval,
    gq_member,
    hermitian_bar_check,
    hermitian_check,
    hyperbolic,
    hyperbolic_form,
    inner,
    is_lambda_quadratic,
    key_lemma_check,
    m_op,
    quadratic_conditions,
    rel_congruent,
    rel_gen_eval,
    t12,
    t21,
    tilde,
    transvection_apply,
    transvection_matrix,
    word_eval,
    word_inverse,
)
from .graded import (
    degree_zero_part,
    dilate,
    dilate_matrix,
    identity_mod_positive,
    matrix_degree_zero,
    spread,
)
from .reduction import (
    KopeikoData,
    ReductionResult,
    kopeiko_matrix,
    kopeiko_to_hyperbolic,
    kopeiko_validate,
    reduce_invertible_corner,
    reduce_lower,
    reduce_upper,
    torsion_descent,
    trunc_product_decomp,
    trunc_split,
)
from .rings import (
    DoubleRing,
    ExcisionRing,
    GaussianModular,
    GradedRing,
    Ideal,
    Integers,
    MatrixRing,
    ModularInt,
    PolynomialRing,
    Ring,
    TruncatedPolynomialRing,
    poly_extend,
    ring_axiom_suite,
    trunc_inverse,
)
from .suites import DEFAULT_SEED, run_suite, run_suites

__version__ = "0.1.0"
