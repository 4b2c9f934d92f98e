"""Exact periodic infinite friezes and the punctured-disc triangulations behind them."""

from .disc import (
    Bridging,
    DiscArc,
    DiscTriangulation,
    Peripheral,
    arcs_cross,
    cut_triangle,
    enumerate_triangulations,
    glue_triangle,
    is_triangulation,
    quiddity_of,
    realizing_triangulations,
    special_points,
    star_triangulation,
    unit_entry_positions,
)
from .errors import (
    DomainError,
    FriezeError,
    InvalidFriezeError,
    InvalidTriangulationError,
    PreconditionError,
    ResourceLimitError,
)
from .frieze import (
    FriezeView,
    QuiddityData,
    check_arithmetic,
    check_diagonal_sum,
    complete_entry,
    entry,
    entry_determinant,
    minimal_period,
    row_window,
    validate_to_depth,
    verify_unimodular,
)
from .labeling import LabelMap, common_differences, entry_via_labels, labels_from, puncture_labels
from .matchings import (
    Matching,
    enumerate_matchings,
    matching_count,
    matching_count_recursive,
    verify_matching_theorem,
)
from .ops import WindowRow, cut_window, glue_window, glued_entry, n_cut, n_glue
from .strip import (
    StripArc,
    StripTriangulation,
    StripVertex,
    Triangle,
    bridging_count,
    fundamental_domains,
    phi,
    psi,
    quiddity_of_strip,
    strip_cut,
    strip_glue,
    triangles_in,
)

__version__ = "0.1.0"

__all__ = [
    "arcs_cross",
    "Bridging",
    "bridging_count",
    "check_arithmetic",
    "check_diagonal_sum",
    "common_differences",
    "complete_entry",
    "cut_triangle",
    "cut_window",
    "DiscArc",
    "DiscTriangulation",
    "DomainError",
    "entry",
    "entry_determinant",
    "entry_via_labels",
    "enumerate_matchings",
    "enumerate_triangulations",
    "FriezeError",
    "FriezeView",
    "fundamental_domains",
    "glue_triangle",
    "glue_window",
    "glued_entry",
    "InvalidFriezeError",
    "InvalidTriangulationError",
    "is_triangulation",
    "LabelMap",
    "labels_from",
    "Matching",
    "matching_count",
    "matching_count_recursive",
    "minimal_period",
    "n_cut",
    "n_glue",
    "Peripheral",
    "phi",
    "PreconditionError",
    "psi",
    "puncture_labels",
    "quiddity_of",
    "quiddity_of_strip",
    "QuiddityData",
    "realizing_triangulations",
    "ResourceLimitError",
    "row_window",
    "special_points",
    "star_triangulation",
    "strip_cut",
    "strip_glue",
    "StripArc",
    "StripTriangulation",
    "StripVertex",
    "Triangle",
    "triangles_in",
    "unit_entry_positions",
    "validate_to_depth",
    "verify_matching_theorem",
    "verify_unimodular",
    "WindowRow",
]
