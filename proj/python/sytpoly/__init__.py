"""Shifted Young tableaux, diagonal vectors, and Minkowski-sum polytopes.

Thin Python surface over the exact-arithmetic C++ core: enumeration of
standard shifted tableaux, the gap-vector count table, lattice points and
vertices of the associated generalized permutohedron, and the built-in
verification suite.
"""

from ._core import (
    catalan,
    coordinate_sum,
    count_by_gaps,
    diag_from_gaps,
    diagram_boxes,
    diagram_size,
    lattice_points,
    lhs_polynomial,
    maximize,
    parse_partition,
    positive_part_count,
    rhs_polynomial,
    tableaux,
    trees,
    verify_all,
    verify_bijection,
    verify_identity,
    vertex_count_closed_form,
    vertices,
)

__all__ = [
    "catalan",
    "coordinate_sum",
    "count_by_gaps",
    "diag_from_gaps",
    "diagram_boxes",
    "diagram_size",
    "lattice_points",
    "lhs_polynomial",
    "maximize",
    "parse_partition",
    "positive_part_count",
    "rhs_polynomial",
    "tableaux",
    "trees",
    "verify_all",
    "verify_bijection",
    "verify_identity",
    "vertex_count_closed_form",
    "vertices",
]
