from .discrepancies import Classification, DiscrepancyVector, classify, log_discrepancies
from .graph import Branch, ResolutionGraph, Vertex, create_resolution_graph
from .intersection import IntersectionMatrix, intersection_matrix
from .modifications import EdgeSite, InteriorSite, Site, blow_up, minimize, sites
from .strata import FiberStratum, curve_symbols, fiber_strata
from .structure import StructureReport, structure_decomposition

__all__ = [
    "Classification",
    "DiscrepancyVector",
    "classify",
    "log_discrepancies",
    "Branch",
    "ResolutionGraph",
    "Vertex",
    "create_resolution_graph",
    "IntersectionMatrix",
    "intersection_matrix",
    "EdgeSite",
    "InteriorSite",
    "Site",
    "blow_up",
    "minimize",
    "sites",
    "FiberStratum",
    "curve_symbols",
    "fiber_strata",
    "StructureReport",
    "structure_decomposition",
]
