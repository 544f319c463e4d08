"""Pants decomposition graphs.

A pants decomposition of S_{g,n} is modeled by its dual graph: one vertex per
pair of pants, one edge per curve.  Such graphs are exactly the connected
multigraphs with maximum degree at most 3 and at least one edge; the surface
is recovered as ``g = cycle rank`` and ``n = sum(3 - deg(v))``.  Boundary
slots are never materialized.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from typing import Union

from .multigraph import MultiGraph, cycle_rank, is_connected
from . import io as gio


class PantsError(ValueError):
    """Base class for invalid pants-graph input."""


class DisconnectedError(PantsError):
    pass


class DegreeError(PantsError):
    pass


class ComplexityError(PantsError):
    pass


class EdgeNotFound(PantsError):
    pass


class BoundaryError(PantsError):
    """Illegal boundary addition or filling."""


class EdgeKind(enum.Enum):
    NON_SEPARATING = "NonSeparating"
    SEPARATING_BOUNDARY = "SeparatingBoundary"  # S2: cuts off boundary components
    SEPARATING_GENUS = "SeparatingGenus"  # S1: cuts off genus


class Target(enum.Enum):
    ANY_SEPARATING = "sep"
    GENUS_ONLY = "genus"


@dataclass(frozen=True)
class PantsGraph:
    graph: MultiGraph
    genus: int
    boundary: int

    @property
    def signature(self) -> tuple[int, int]:
        return self.genus, self.boundary

    @property
    def complexity(self) -> int:
        return 3 * self.genus - 3 + self.boundary

    def to_json_obj(self) -> dict:
        obj = gio.to_json_obj(self.graph)
        obj.update(genus=self.genus, boundary=self.boundary)
        return obj


def validate(g: MultiGraph) -> PantsGraph:
    if g.edge_count == 0:
        raise ComplexityError("graph has no edges (complexity < 1)")
    if not is_connected(g):
        raise DisconnectedError("pants graph must be connected")
    if g.max_degree > 3:
        bad = next(v for v, d in enumerate(g.degrees) if d > 3)
        raise DegreeError(f"vertex {bad} has degree {g.degrees[bad]} > 3")
    genus = cycle_rank(g)
    boundary = sum(3 - d for d in g.degrees)
    assert g.vertex_count == 2 * (genus - 1) + boundary
    assert g.edge_count == 3 * (genus - 1) + boundary
    return PantsGraph(g, genus, boundary)


def pants_from_json(obj: dict) -> PantsGraph:
    p = validate(gio.from_json_obj(obj))
    if "genus" in obj and int(obj["genus"]) != p.genus:
        raise PantsError(f"stored genus {obj['genus']} != recomputed {p.genus}")
    if "boundary" in obj and int(obj["boundary"]) != p.boundary:
        raise PantsError(f"stored boundary {obj['boundary']} != recomputed {p.boundary}")
    return p


def pants_to_json(p: PantsGraph) -> str:
    return json.dumps(p.to_json_obj())


def surface_signature(p: PantsGraph) -> tuple[int, int]:
    g = p.graph
    return cycle_rank(g), sum(3 - d for d in g.degrees)


def _edge_index(g: MultiGraph, e) -> int:
    if isinstance(e, int):
        if not 0 <= e < g.edge_count:
            raise EdgeNotFound(f"edge index {e} out of range")
        return e
    u, v = sorted(e)
    try:
        return g.edges.index((u, v))
    except ValueError:
        raise EdgeNotFound(f"edge {e} not present") from None


def _side_is_nontrivial(g: MultiGraph, side: list[int]) -> bool:
    return len(side) >= 2 or g.loop_counts[side[0]] > 0


def _side_is_cyclic(g: MultiGraph, side: set[int], skip: int) -> bool:
    inner = sum(1 for i, (u, v) in enumerate(g.edges) if i != skip and u in side)
    return inner - len(side) + 1 > 0


def classify_edge(p: PantsGraph, e) -> EdgeKind:
    """Classify the curve dual to edge ``e`` (an index or an endpoint pair)."""
    g = p.graph
    idx = _edge_index(g, e)
    u, v = g.edges[idx]
    if u == v:
        return EdgeKind.NON_SEPARATING
    comps = g.remove_edge_index(idx).components()
    if len(comps) == 1:
        return EdgeKind.NON_SEPARATING
    a, b = comps
    if not (_side_is_nontrivial(g, a) and _side_is_nontrivial(g, b)):
        return EdgeKind.NON_SEPARATING
    if _side_is_cyclic(g, set(a), idx) and _side_is_cyclic(g, set(b), idx):
        return EdgeKind.SEPARATING_GENUS
    return EdgeKind.SEPARATING_BOUNDARY


def _bridges(g: MultiGraph) -> list[int]:
    """Indices of non-loop edges whose removal disconnects ``g`` (iterative Tarjan)."""
    n = g.vertex_count
    disc = [-1] * n
    low = [0] * n
    out = []
    timer = 0
    inc = g.incidence
    for root in range(n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = timer
        timer += 1
        stack = [(root, -1, iter(inc[root]))]
        while stack:
            v, pe, it = stack[-1]
            advanced = False
            for w, eid in it:
                if eid == pe:
                    continue
                if disc[w] == -1:
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append((w, eid, iter(inc[w])))
                    advanced = True
                    break
                low[v] = min(low[v], disc[w])
            if advanced:
                continue
            stack.pop()
            if stack:
                parent = stack[-1][0]
                low[parent] = min(low[parent], low[v])
                if low[v] > disc[parent]:
                    out.append(pe)
    return sorted(out)


def edge_kinds(p: PantsGraph) -> list[EdgeKind]:
    """Classification of every edge, in edge-index order."""
    kinds = [EdgeKind.NON_SEPARATING] * p.graph.edge_count
    for idx in _bridges(p.graph):
        kinds[idx] = classify_edge(p, idx)
    return kinds


def has_separating(p: PantsGraph, target: Target = Target.ANY_SEPARATING) -> bool:
    for idx in _bridges(p.graph):
        kind = classify_edge(p, idx)
        if kind is EdgeKind.SEPARATING_GENUS:
            return True
        if kind is EdgeKind.SEPARATING_BOUNDARY and target is Target.ANY_SEPARATING:
            return True
    return False


@dataclass(frozen=True)
class SubdivideEdge:
    edge: int


@dataclass(frozen=True)
class AttachPendant:
    vertex: int


BoundarySite = Union[SubdivideEdge, AttachPendant]


def add_boundary(p: PantsGraph, site: BoundarySite) -> PantsGraph:
    g = p.graph
    x = g.vertex_count
    if isinstance(site, SubdivideEdge):
        idx = _edge_index(g, site.edge)
        u, w = g.edges[idx]
        edges = list(g.edges[:idx] + g.edges[idx + 1 :]) + [(u, x), (x, w)]
    elif isinstance(site, AttachPendant):
        v = site.vertex
        if not 0 <= v < x:
            raise BoundaryError(f"vertex {v} not in graph")
        if g.degrees[v] >= 3:
            raise BoundaryError(f"vertex {v} already has degree 3")
        edges = list(g.edges) + [(v, x)]
    else:
        raise TypeError(f"unknown boundary site {site!r}")
    out = validate(MultiGraph(x + 1, edges))
    assert out.genus == p.genus and out.boundary == p.boundary + 1
    return out


def boundary_sites(p: PantsGraph) -> list[BoundarySite]:
    g = p.graph
    sites: list[BoundarySite] = [SubdivideEdge(i) for i in range(g.edge_count)]
    sites.extend(AttachPendant(v) for v in range(g.vertex_count) if g.degrees[v] <= 2)
    return sites


def fill_boundary(p: PantsGraph, v: int) -> PantsGraph:
    g = p.graph
    if not 0 <= v < g.vertex_count:
        raise BoundaryError(f"vertex {v} not in graph")
    deg = g.degrees[v]
    if deg == 3:
        raise BoundaryError(f"vertex {v} has degree 3: no boundary to fill")
    if g.edge_count < 2:
        raise ComplexityError("filling would leave complexity < 1")
    if g.loop_counts[v]:
        raise BoundaryError(f"vertex {v} carries its own loop; filling would isolate it")
    ends = [w for w, _ in g.incidence[v]]
    kept = [e for e in g.edges if v not in e]
    if deg == 2:
        a, b = ends
        kept.append((a, b))
    elif deg == 0:
        raise BoundaryError(f"vertex {v} is isolated")
    perm = {old: new for new, old in enumerate(w for w in range(g.vertex_count) if w != v)}
    h = MultiGraph(g.vertex_count - 1, [(perm[a], perm[b]) for a, b in kept])
    if not is_connected(h):
        raise DisconnectedError("filling disconnects the graph")
    out = validate(h)
    assert out.genus == p.genus and out.boundary == p.boundary - 1
    return out


def has_three_consecutive_low_degree(p: PantsGraph) -> bool:
    g = p.graph
    low = [d <= 2 for d in g.degrees]
    for mid in range(g.vertex_count):
        if not low[mid]:
            continue
        ends = {w for w in g.neighbor_sets[mid] if low[w]}
        if len(ends) >= 2:
            return True
    return False
