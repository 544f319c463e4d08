"""Connected cut-sets and the distance bounds built from them."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels
from .multigraph import MultiGraph, girth, is_connected
from .pants import PantsError, PantsGraph


@dataclass(frozen=True)
class CutsetResult:
    size: int | None
    witness: tuple[int, ...] | None
    search_cap: int

    def to_json_obj(self) -> dict:
        return {"size": self.size, "witness": None if self.witness is None else list(self.witness), "cap": self.search_cap}


def nontrivial_pieces(g: MultiGraph, removed) -> list[list[int]]:
    """Components of ``g - removed`` with >= 2 vertices or a single looped vertex."""
    loops = g.loop_counts
    return [c for c in g.components(removed) if len(c) >= 2 or loops[c[0]] > 0]


def is_nontrivial_cutset(g: MultiGraph, subset) -> bool:
    return len(nontrivial_pieces(g, subset)) >= 2


def _connected_subsets_by_size(g: MultiGraph, cap: int):
    """Yield ``(k, [bitmasks])`` for k = 1..cap: all vertex subsets inducing connected subgraphs."""
    nbr_mask = [0] * g.vertex_count
    for v, nbrs in enumerate(g.neighbor_sets):
        for w in nbrs:
            nbr_mask[v] |= 1 << w
    layer = {1 << v for v in range(g.vertex_count)}
    k = 1
    while layer and k <= cap:
        yield k, sorted(layer)
        if k == cap:
            return
        nxt = set()
        for s in layer:
            frontier = 0
            rest = s
            while rest:
                low = rest & -rest
                frontier |= nbr_mask[low.bit_length() - 1]
                rest ^= low
            frontier &= ~s
            while frontier:
                low = frontier & -frontier
                nxt.add(s | low)
                frontier ^= low
        layer = nxt
        k += 1


def min_nontrivial_connected_cutset(g: MultiGraph, cap: int) -> CutsetResult:
    """Smallest connected vertex set whose deletion leaves two non-trivial components.

    Exhaustive over connected subsets of size <= ``cap``; ``size`` is ``None``
    when no such set exists within the cap.
    """
    if not is_connected(g):
        raise ValueError("cut-set search requires a connected graph")
    cap = min(int(cap), g.vertex_count)
    indptr, indices, _ = g.csr
    loops = np.asarray(g.loop_counts, dtype=np.int64) if g.vertex_count else np.zeros(0, dtype=np.int64)
    mask = np.zeros(g.vertex_count, dtype=np.bool_)
    for k, subsets in _connected_subsets_by_size(g, cap):
        for s in subsets:
            mask[:] = False
            members = [v for v in range(g.vertex_count) if s >> v & 1]
            mask[members] = True
            labels, count = _kernels.component_labels(indptr, indices, mask)
            if count < 2:
                continue
            sizes = np.bincount(labels[labels >= 0], minlength=count)
            looped = np.zeros(count, dtype=np.int64)
            live = labels >= 0
            np.add.at(looped, labels[live], loops[live])
            if int(np.count_nonzero((sizes >= 2) | (looped > 0))) >= 2:
                return CutsetResult(k, tuple(members), cap)
    return CutsetResult(None, None, cap)


def s1_lower_bound(p: PantsGraph, cap: int) -> int:
    """Lower bound ``min(girth, d) - 1`` on the move distance to any genus-separating pants graph.

    ``d`` is the minimal non-trivial connected cut-set size; when none exists
    within ``cap`` it is taken as ``cap + 1``.
    """
    if p.genus < 2:
        raise PantsError("genus-separating curves need genus >= 2")
    res = min_nontrivial_connected_cutset(p.graph, cap)
    d = res.size if res.size is not None else res.search_cap + 1
    return int(min(girth(p.graph), d)) - 1


def _floor_two_log2(x: int) -> int:
    # floor(2*log2(x)) for integer x >= 1, computed exactly
    return (x * x).bit_length() - 1


def upper_bounds(g: int, n: int) -> tuple[int | None, int | None]:
    """``(floor(2 log2(g-1) + 3), floor(16(g-1)/n + 12))``, each ``None`` where undefined."""
    if g < 2:
        return None, None
    log_bound = _floor_two_log2(g - 1) + 3
    boundary_bound = (16 * (g - 1)) // n + 12 if n >= 3 else None
    return log_bound, boundary_bound


def min_upper_bound(g: int, n: int) -> int | None:
    vals = [b for b in upper_bounds(g, n) if b is not None]
    return min(vals) if vals else None
