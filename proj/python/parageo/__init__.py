"""Paracomplex projective geometry and the geometry of finite probability
distributions: split-complex arithmetic, pseudo-Euclidean signatures and
causal classification, projective distances, simplex geodesics, and the
numerical verification suites."""

from ._core import (
    CausalClass,
    Paracomplex,
    ParageoError,
    ProjectivePoint,
    __version__,
    alpha_connection_curvature,
    bhattacharyya_affinity,
    bilinear_eval,
    causal_class,
    cone_automorphism,
    cone_geodesic,
    cross_ratio_distance,
    double_cover,
    embed_projective,
    fisher_metric,
    fisher_rao_distance,
    hermitian_distance,
    maurer_cartan_residual,
    orientable,
    orthant_is_self_dual,
    paraholomorphy_residual,
    parse_paracomplex,
    pierce_mirror,
    projectively_equal,
    rpn_distance,
    run_suite,
    signature_of_gram,
    simplex_geodesic,
    sphere_distance,
    suite_names,
    to_idempotent,
)

__all__ = [
    "CausalClass",
    "Paracomplex",
    "ParageoError",
    "ProjectivePoint",
    "__version__",
    "alpha_connection_curvature",
    "bhattacharyya_affinity",
    "bilinear_eval",
    "causal_class",
    "cone_automorphism",
    "cone_geodesic",
    "cross_ratio_distance",
    "double_cover",
    "embed_projective",
    "fisher_metric",
    "fisher_rao_distance",
    "hermitian_distance",
    "maurer_cartan_residual",
    "orientable",
    "orthant_is_self_dual",
    "paraholomorphy_residual",
    "parse_paracomplex",
    "pierce_mirror",
    "projectively_equal",
    "rpn_distance",
    "run_suite",
    "signature_of_gram",
    "simplex_geodesic",
    "sphere_distance",
    "suite_names",
    "to_idempotent",
]
