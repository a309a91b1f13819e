"""Exact Hodge-number arithmetic for symmetric products, Hilbert schemes of
points of surfaces, and quotients of n-fold products by signed-permutation
groups, including the Calabi-Yau double covers arising from Enriques
surfaces.  Everything is computed in arbitrary-precision integer arithmetic
and audited against an independent brute-force projector."""

from .bigraded import (
    EquivHodgeTable,
    HodgeTable,
    NegativeIndex,
    OddCohomologyUnsupported,
    direct_sum,
    enriques,
    euler,
    betti,
    format_diamond,
    k3,
    k3_enriques,
    load_surface_spec,
    parse_surface_spec,
    point,
    preset,
    shift_by,
    tate_twist,
    tensor,
)
from .cover import (
    BlowupPlan,
    CenterLabel,
    DimensionMismatch,
    blowup_assemble,
    cover_diamond_n2,
    exceptional_orbits,
    h2_cover,
    h_top_minus,
)
from .group import (
    GroupElement,
    SignedCycleType,
    TooLarge,
    classes,
    enumerate_group,
    group_order,
    signed_cycle_type,
)
from .hilbert import (
    MismatchReport,
    Partition,
    euler_check,
    h_one_top,
    hilbert_diamond,
    partitions,
)
from .invariants import (
    IntegralityViolation,
    TracePolynomial,
    class_trace,
    invariant_dims,
    sym_multi,
    sym_product,
)
from .oracle import apply_element, labeled_basis, projector_invariant_dims

__version__ = "0.1.0"

__all__ = [
    "BlowupPlan",
    "CenterLabel",
    "DimensionMismatch",
    "EquivHodgeTable",
    "GroupElement",
    "HodgeTable",
    "IntegralityViolation",
    "MismatchReport",
    "NegativeIndex",
    "OddCohomologyUnsupported",
    "Partition",
    "SignedCycleType",
    "TooLarge",
    "TracePolynomial",
    "apply_element",
    "betti",
    "blowup_assemble",
    "class_trace",
    "classes",
    "cover_diamond_n2",
    "direct_sum",
    "enriques",
    "enumerate_group",
    "euler",
    "euler_check",
    "exceptional_orbits",
    "format_diamond",
    "group_order",
    "h2_cover",
    "h_one_top",
    "h_top_minus",
    "hilbert_diamond",
    "invariant_dims",
    "k3",
    "k3_enriques",
    "labeled_basis",
    "load_surface_spec",
    "parse_surface_spec",
    "partitions",
    "point",
    "preset",
    "projector_invariant_dims",
    "shift_by",
    "signed_cycle_type",
    "sym_multi",
    "sym_product",
    "tate_twist",
    "tensor",
]
