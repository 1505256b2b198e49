"""Combinatorics of normal convex tilings.

Half-edge patches, the normalizing rewrites, dual triangulations with
metric-ball growth, a synthetic cover simulator, and the packing bound on
the total tile index.
"""
from .cover import check_lower_bounds, check_recurrences, simulate_cover
from .document import emit_tiling, parse_tiling
from .dual import bfs_balls, build_dual, growth_sequences
from .generators import disclination_patch, hex_patch
from .kernels import BACKEND
from .layout import LayoutParams, realize_layout
from .normalize import normalize, refine_to_edge_to_edge, split_high_degree_vertices
from .svg import render_svg
from .theorem import containment_check, index_sum_bound, packing_capacity, verify_theorem
from .tiling import Tiling, build_halfedge, face_metrics, patch_summary

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "LayoutParams",
    "Tiling",
    "bfs_balls",
    "build_dual",
    "build_halfedge",
    "check_lower_bounds",
    "check_recurrences",
    "containment_check",
    "disclination_patch",
    "emit_tiling",
    "face_metrics",
    "growth_sequences",
    "hex_patch",
    "index_sum_bound",
    "normalize",
    "packing_capacity",
    "parse_tiling",
    "patch_summary",
    "realize_layout",
    "refine_to_edge_to_edge",
    "render_svg",
    "simulate_cover",
    "split_high_degree_vertices",
    "verify_theorem",
]
