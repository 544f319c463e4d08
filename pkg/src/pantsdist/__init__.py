"""Distances from pants decompositions to the separating-curve locus, via pants graphs."""

from ._kernels import BACKEND
from .canonical import CanonicalForm, canonical_form, is_isomorphic
from .multigraph import INFINITY, MultiGraph, cycle_rank, girth, is_connected
from .pants import EdgeKind, PantsGraph, Target, classify_edge, has_separating, validate
from .moves import MoveEdit, apply_move, neighbors
from .metrics import min_nontrivial_connected_cutset, s1_lower_bound, upper_bounds
from .search import compute_dmax, distance_to_target, enumerate_pants_graphs

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "CanonicalForm",
    "EdgeKind",
    "INFINITY",
    "MoveEdit",
    "MultiGraph",
    "PantsGraph",
    "Target",
    "apply_move",
    "canonical_form",
    "classify_edge",
    "compute_dmax",
    "cycle_rank",
    "distance_to_target",
    "enumerate_pants_graphs",
    "girth",
    "has_separating",
    "is_connected",
    "is_isomorphic",
    "min_nontrivial_connected_cutset",
    "neighbors",
    "s1_lower_bound",
    "upper_bounds",
    "validate",
]
