"""Zeros, poles and critical points of rational functions.

A rational function is a finite set of distinct points in the plane, each with
a nonzero integer multiplicity (positive for zeros, negative for poles). Its
critical points are the zeros of the logarithmic derivative.
"""

from .bounds import (
    CertifiedExtremum,
    CircleFamily,
    Theorem2Constant,
    Theorem4Constant,
    alexander_walsh_radius,
    certified_min,
    circle_extremum,
    corollary1_max_rho,
    exclusion_radius,
    inequality1_rho_bound,
    theorem2_constant,
    theorem2_K,
    theorem2_points,
    theorem2_validate,
    theorem3_L,
    theorem4_constants,
    theorem4_points,
    theorem4_threshold,
)
from .core import (
    RationalFunction,
    WeightedPoint,
    as_point,
    degree,
    make_rational_function,
    min_distance,
    multiplicity_at,
    pairwise_min_distance,
    rho,
    rho_continuity_bound,
)
from .document import (
    document_to_function,
    function_to_document,
    parse_function_document,
    serialize_function_document,
)
from .errors import *  # noqa: F401,F403
from .polyops import (
    LogDerivative,
    Polynomial,
    eval_log_derivative,
    expected_critical_count,
    log_derivative,
    partial_fraction_sum,
    poly_eval,
    poly_from_roots,
)
from .roots import RootResult, cluster_roots, critical_points, find_roots
from .verify import (
    EnsembleConfig,
    MatchReport,
    SuiteParams,
    TrialRecord,
    VerificationReport,
    generate_ensemble,
    match_clusters,
    run_suite,
)

__version__ = "0.1.0"
