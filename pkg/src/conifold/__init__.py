"""Symplectic conifold transitions: good relations, surgery bookkeeping,
quintic vanishing cycles, fibred spheres and local-model checks."""

from .relations import (
    CycleConfiguration,
    GoodRelation,
    SearchReport,
    good_relation,
    is_good_subset,
    search_good_subsets,
    span_dim,
)
from .surgery import (
    QUINTIC,
    NoGoodRelationError,
    SixManifoldTopology,
    conifold_transition,
    obstruction_flags,
    reverse_transition,
)
from .zlinalg import (
    IntegerMatrix,
    in_row_span,
    kernel_basis,
    rank_exact,
    smith_normal_form,
)

__version__ = "0.1.0"

__all__ = [
    "CycleConfiguration",
    "GoodRelation",
    "SearchReport",
    "good_relation",
    "is_good_subset",
    "search_good_subsets",
    "span_dim",
    "QUINTIC",
    "NoGoodRelationError",
    "SixManifoldTopology",
    "conifold_transition",
    "obstruction_flags",
    "reverse_transition",
    "IntegerMatrix",
    "in_row_span",
    "kernel_basis",
    "rank_exact",
    "smith_normal_form",
]
