"""Exact enumeration and verification of irreducible edge-to-edge
decompositions of centrally symmetric 2k-gons into centrally symmetric
tiles. Thin wrapper over the C++ core."""

from ._core import (
    asymptotic_estimate,
    bound_report,
    canonical_code_of_file,
    canonical_codes,
    case_counts,
    count_classes,
    loopless_map_count,
    render_file,
    validate_file,
    write_classes,
)

__all__ = [
    "asymptotic_estimate",
    "bound_report",
    "canonical_code_of_file",
    "canonical_codes",
    "case_counts",
    "count_classes",
    "loopless_map_count",
    "render_file",
    "validate_file",
    "write_classes",
]

__version__ = "1.0.0"
