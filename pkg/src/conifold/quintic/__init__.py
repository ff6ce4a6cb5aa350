"""Lagrangian 3-spheres on the quintic pencil and its 125-nodal member."""

from .cells import (
    PhaseCell,
    QuinticCycle,
    branch_transport,
    cells_disjoint,
    cycle_betti_numbers,
    cycle_boundary,
    cycle_from_u_label,
    cycle_u_label,
    cycles_disjoint,
    generate_cycles,
    group_elements,
    make_cycle,
)
from .intersection import DEFAULT_RATES, FALLBACK_RATES, pairing_entry, pairing_matrix
from .proposition import (
    EXPECTED_RANK,
    EXPECTED_VANISHING_SPAN,
    act_on_vanishing,
    node,
    quintic_configuration,
    quintic_pairing,
    real_solution_check,
    reproduce_proposition,
    vanishing_classes,
    vanishing_cycle_indices,
)

__all__ = [
    "PhaseCell",
    "QuinticCycle",
    "branch_transport",
    "cells_disjoint",
    "cycle_betti_numbers",
    "cycle_boundary",
    "cycle_from_u_label",
    "cycle_u_label",
    "cycles_disjoint",
    "generate_cycles",
    "group_elements",
    "make_cycle",
    "DEFAULT_RATES",
    "FALLBACK_RATES",
    "pairing_entry",
    "pairing_matrix",
    "EXPECTED_RANK",
    "EXPECTED_VANISHING_SPAN",
    "act_on_vanishing",
    "node",
    "quintic_configuration",
    "quintic_pairing",
    "real_solution_check",
    "reproduce_proposition",
    "vanishing_classes",
    "vanishing_cycle_indices",
]
