"""Dominant and cyclic vertices of finite graphs, vertex spectral measures,
and truncations of Jacobi operators on rays and stars."""

from .graph import Graph
from .families import FamilySpec, generate
from .linalg import char_poly, local_min_poly, min_poly
from .factor import factor_over_Q
from .dominance import dominance_report, is_cyclic_vertex, is_dominant_exact, null_factors, scan_corpus
from .spectral import eigendecompose, vertex_spectral_measure, counting_measure, walk_count_spectral

__version__ = "0.1.0"

__all__ = [
    "Graph",
    "FamilySpec",
    "generate",
    "char_poly",
    "min_poly",
    "local_min_poly",
    "factor_over_Q",
    "dominance_report",
    "is_dominant_exact",
    "is_cyclic_vertex",
    "null_factors",
    "scan_corpus",
    "eigendecompose",
    "vertex_spectral_measure",
    "counting_measure",
    "walk_count_spectral",
]
