"""Finite-dimensional Hopf algebras from structure constants and the constructions on them."""
from .groups import (
    FiniteGroup,
    GroupRBViolation,
    conjugation_action,
    cyclic_group,
    find_group_rb_operators,
    group_algebra,
    group_rb_lift,
    group_rb_report,
    symmetric_group,
)
from .hopf import (
    FinDimHopf,
    HopfAxiomError,
    NotCocommutative,
    check_posthopf_iso,
    convolution_inverse,
    grouplike_check,
    h4_post_table,
    h4_scaling_map,
    primitives,
    skew_primitive_check,
    sweedler_h4,
    trivial_post_table,
    verify_hopf,
    verify_post_hopf_findim,
)
from .rrb import (
    RRB,
    MatchedPairViolation,
    adT_module_bialgebra_check,
    descendent_hopf,
    double_crossproduct,
    graph_check,
    matched_pair_from_rrb,
    module_characterization_check,
    smash_product,
    verify_rrb,
)

__all__ = [
    "FinDimHopf", "FiniteGroup", "GroupRBViolation", "HopfAxiomError", "MatchedPairViolation",
    "NotCocommutative", "RRB", "adT_module_bialgebra_check", "check_posthopf_iso", "conjugation_action",
    "convolution_inverse", "cyclic_group", "descendent_hopf", "double_crossproduct", "find_group_rb_operators",
    "graph_check", "group_algebra", "group_rb_lift", "group_rb_report", "grouplike_check", "h4_post_table",
    "h4_scaling_map", "matched_pair_from_rrb", "module_characterization_check", "primitives",
    "skew_primitive_check", "smash_product", "sweedler_h4", "symmetric_group", "trivial_post_table",
    "verify_hopf", "verify_post_hopf_findim", "verify_rrb",
]
