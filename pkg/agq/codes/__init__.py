"""Linear codes over GF(q^2), their distances, and one-point AG codes."""

from .ag import (
    AgCode,
    VerificationRow,
    build,
    dual_parameter,
    euclidean_threshold,
    frobenius_degree_law,
    hermitian_threshold,
    is_dual_constructible,
    nested,
    scan_hermitian,
    verify_claims,
    verify_duality,
)
from .distance import (
    INFINITY,
    DistanceBounds,
    DistanceBudgetExceeded,
    DistanceReport,
    brouwer_zimmermann,
    certify_distance,
    min_distance_exhaustive,
    min_distance_lower_isd,
    min_weight_upper,
)
from .linear import CodeParameterError, LinearCode, equal, subset, weight, weights

__all__ = [
    "AgCode",
    "CodeParameterError",
    "DistanceBounds",
    "DistanceBudgetExceeded",
    "DistanceReport",
    "INFINITY",
    "LinearCode",
    "VerificationRow",
    "brouwer_zimmermann",
    "build",
    "certify_distance",
    "dual_parameter",
    "equal",
    "euclidean_threshold",
    "frobenius_degree_law",
    "hermitian_threshold",
    "is_dual_constructible",
    "min_distance_exhaustive",
    "min_distance_lower_isd",
    "min_weight_upper",
    "nested",
    "scan_hermitian",
    "subset",
    "verify_claims",
    "verify_duality",
    "weight",
    "weights",
]
