"""Enumeration of pants-graph classes and breadth-first search over moves.

Closed surfaces (n = 0) are enumerated as connected cubic multigraphs, grown
two vertices at a time by two insertions that together reach every class:

* edge insertion -- subdivide an edge by ``x``, subdivide any edge of the
  result by ``y``, join ``x`` and ``y``;
* lollipop insertion -- subdivide an edge by ``x`` and hang a new vertex
  carrying a loop from ``x``.

Surfaces with boundary are grown from (g, n-1) by every boundary addition
(subdivide an edge, or hang a pendant vertex).  Every class of (g, n) fills
back to a class of (g, n-1), so the closure is complete.
"""

from __future__ import annotations

import json
import logging
import random
from collections import deque
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path

from .canonical import CANON_CAP, CanonicalForm, canonical_form, canonical_labeling, graph_from_key
from .metrics import min_upper_bound
from .moves import MoveEdit, apply_move, legal_moves, neighbor_map
from .multigraph import MultiGraph
from .pants import ComplexityError, PantsError, PantsGraph, Target, add_boundary, boundary_sites, has_separating, validate

log = logging.getLogger(__name__)

CACHE_FORMAT = "pantsdist-enum-v1"


class SearchError(RuntimeError):
    pass


class DepthExceeded(SearchError):
    pass


class IntegrityError(SearchError):
    pass


# ---------------------------------------------------------------------------
# enumeration


def _subdivide(edges: list, idx: int, x: int) -> list:
    a, b = edges[idx]
    return edges[:idx] + edges[idx + 1 :] + [(a, x), (x, b)]


def _insertion_children(h: MultiGraph, lollipops: bool = True):
    n = h.vertex_count
    x, y = n, n + 1
    base = list(h.edges)
    for s1 in range(len(base)):
        once = _subdivide(base, s1, x)
        for s2 in range(len(once)):
            yield MultiGraph(n + 2, _subdivide(once, s2, y) + [(x, y)])
        if lollipops:
            yield MultiGraph(n + 2, once + [(x, y), (y, y)])


def _dedup(graphs) -> list[MultiGraph]:
    keys = set()
    seen = set()
    for g in graphs:
        if g in seen:
            continue
        seen.add(g)
        keys.add(canonical_labeling(g)[0])
    return [graph_from_key(k) for k in sorted(keys)]


@lru_cache(maxsize=None)
def cubic_multigraphs(vertex_count: int) -> tuple[MultiGraph, ...]:
    """Connected 3-regular multigraphs (loops and parallel edges allowed), one per class."""
    if vertex_count < 2 or vertex_count % 2:
        raise ValueError("cubic multigraphs need an even vertex count >= 2")
    if vertex_count == 2:
        return tuple(_dedup([MultiGraph(2, [(0, 1)] * 3), MultiGraph(2, [(0, 0), (0, 1), (1, 1)])]))
    parents = cubic_multigraphs(vertex_count - 2)
    return tuple(_dedup(c for h in parents for c in _insertion_children(h)))


def _excess_multiplicity(g: MultiGraph) -> int:
    from collections import Counter

    return sum(c - 1 for (u, v), c in Counter(g.edges).items() if u != v and c > 1)


@lru_cache(maxsize=None)
def simple_cubic_graphs(vertex_count: int) -> tuple[MultiGraph, ...]:
    """Connected simple cubic graphs, one per class.

    A simple cubic graph minus a cycle edge, with its two ends suppressed, is a
    loopless cubic multigraph with at most two surplus parallel edges, so only
    those parents need edge insertion.
    """
    if vertex_count < 4 or vertex_count % 2:
        return ()
    parents = [h for h in cubic_multigraphs(vertex_count - 2) if not h.has_loop() and _excess_multiplicity(h) <= 2]
    kids = (c for h in parents for c in _insertion_children(h, lollipops=False))
    return tuple(_dedup(c for c in kids if c.is_simple()))


def _cache_path(cache_dir, g: int, n: int) -> Path:
    return Path(cache_dir) / f"enum_g{g}_n{n}_{CACHE_FORMAT}.json"


def _load_cache(cache_dir, g, n):
    path = _cache_path(cache_dir, g, n)
    if not path.exists():
        return None
    try:
        obj = json.loads(path.read_text())
    except (OSError, json.JSONDecodeError):
        return None
    if obj.get("format") != CACHE_FORMAT or obj.get("g") != g or obj.get("n") != n:
        return None
    return [graph_from_key(bytes.fromhex(k)) for k in obj["keys"]]


def _store_cache(cache_dir, g, n, graphs):
    path = _cache_path(cache_dir, g, n)
    path.parent.mkdir(parents=True, exist_ok=True)
    keys = [canonical_labeling(x)[0].hex() for x in graphs]
    path.write_text(json.dumps({"format": CACHE_FORMAT, "g": g, "n": n, "keys": keys}))


@lru_cache(maxsize=None)
def _enumerate(g: int, n: int) -> tuple[MultiGraph, ...]:
    if n == 0:
        return cubic_multigraphs(2 * g - 2)
    if (g, n) == (0, 4):
        return (MultiGraph(2, [(0, 1)]),)
    if (g, n) == (1, 1):
        return (MultiGraph(1, [(0, 0)]),)
    parents = _enumerate(g, n - 1)
    kids = []
    for h in parents:
        p = validate(h)
        kids.extend(add_boundary(p, s).graph for s in boundary_sites(p))
    return tuple(_dedup(kids))


def enumerate_pants_graphs(g: int, n: int, cache_dir=None) -> list[PantsGraph]:
    """One pants graph per isomorphism class for S_{g,n}, sorted by canonical key."""
    if g < 0 or n < 0:
        raise PantsError("genus and boundary count must be non-negative")
    if 3 * g - 3 + n < 1:
        raise ComplexityError(f"S_{{{g},{n}}} has complexity {3 * g - 3 + n} < 1")
    if 2 * g - 2 + n > CANON_CAP:
        raise SearchError(f"{2 * g - 2 + n} vertices exceeds the canonicalization cap {CANON_CAP}")
    graphs = None
    if cache_dir is not None:
        graphs = _load_cache(cache_dir, g, n)
    if graphs is None:
        graphs = list(_enumerate(g, n))
        if cache_dir is not None:
            _store_cache(cache_dir, g, n, graphs)
    out = [validate(x) for x in graphs]
    for p in out:
        assert p.signature == (g, n)
    return out


# ---------------------------------------------------------------------------
# single-source search


@dataclass
class DistanceResult:
    distance: int
    target: Target
    witness: list[MoveEdit]
    path: list[PantsGraph] = field(repr=False, default_factory=list)

    def to_json_obj(self) -> dict:
        steps = [m.to_json_obj(p.graph) for m, p in zip(self.witness, self.path)]
        return {"distance": self.distance, "target": self.target.value, "witness": steps}


def default_max_depth(g: int, n: int) -> int:
    bound = min_upper_bound(g, n)
    return (bound if bound is not None else 2) + 2


def distance_to_target(p: PantsGraph, target: Target = Target.ANY_SEPARATING, max_depth: int | None = None) -> DistanceResult:
    """Breadth-first search over isomorphism classes for the nearest pants graph in the target set."""
    if target is Target.GENUS_ONLY and p.genus < 2:
        raise PantsError("genus-separating target needs genus >= 2")
    if max_depth is None:
        max_depth = default_max_depth(p.genus, p.boundary)
    if has_separating(p, target):
        return DistanceResult(0, target, [], [p])
    start = canonical_form(p.graph)
    parent: dict[CanonicalForm, tuple[CanonicalForm | None, MoveEdit | None, PantsGraph]] = {start: (None, None, p)}
    frontier = [start]
    for depth in range(1, max_depth + 1):
        nxt = []
        for key in frontier:
            rep = parent[key][2]
            for m, q in legal_moves(rep):
                cf = canonical_form(q.graph)
                if cf in parent:
                    continue
                parent[cf] = (key, m, q)
                if has_separating(q, target):
                    return _trace(parent, cf, target)
                nxt.append(cf)
        if not nxt:
            raise SearchError("target set unreachable: move component exhausted")
        frontier = nxt
    raise DepthExceeded(f"no {target.value} pants graph within {max_depth} moves")


def _trace(parent, key, target) -> DistanceResult:
    edits = []
    graphs = []
    while True:
        prev, m, q = parent[key]
        graphs.append(q)
        if prev is None:
            break
        edits.append(m)
        key = prev
    edits.reverse()
    graphs.reverse()
    return DistanceResult(len(edits), target, edits, graphs)


def replay(p: PantsGraph, witness) -> PantsGraph:
    for m in witness:
        p = apply_move(p, m)
    return p


# ---------------------------------------------------------------------------
# whole-cell search


def _neighbor_keys(graph: MultiGraph) -> list[bytes]:
    return sorted(cf.key for cf in neighbor_map(validate(graph)))


@dataclass
class ClassGraph:
    """All classes of a cell with the move relation between them."""

    g: int
    n: int
    classes: list[PantsGraph]
    keys: list[bytes]
    adjacency: list[list[int]]
    symmetric: bool

    def sources(self, target: Target) -> list[int]:
        return [i for i, p in enumerate(self.classes) if has_separating(p, target)]

    def distances(self, target: Target = Target.ANY_SEPARATING) -> list[int]:
        """Multi-source BFS levels from the target set (``-1`` if unreached)."""
        if not self.symmetric:
            return [distance_to_target(p, target, max_depth=len(self.classes)).distance for p in self.classes]
        dist = [-1] * len(self.classes)
        queue = deque()
        for i in self.sources(target):
            dist[i] = 0
            queue.append(i)
        while queue:
            i = queue.popleft()
            for j in self.adjacency[i]:
                if dist[j] == -1:
                    dist[j] = dist[i] + 1
                    queue.append(j)
        return dist


def build_class_graph(g: int, n: int, threads: int = 1, cache_dir=None) -> ClassGraph:
    classes = enumerate_pants_graphs(g, n, cache_dir=cache_dir)
    keys = [canonical_form(p.graph).key for p in classes]
    index = {k: i for i, k in enumerate(keys)}
    graphs = [p.graph for p in classes]
    if threads > 1 and len(graphs) > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            nkeys = list(pool.map(_neighbor_keys, graphs, chunksize=max(1, len(graphs) // (4 * threads))))
    else:
        nkeys = [_neighbor_keys(x) for x in graphs]
    adjacency = []
    for i, row in enumerate(nkeys):
        missing = [k for k in row if k not in index]
        if missing:
            raise IntegrityError(f"class {i} of S_{{{g},{n}}} has a neighbor outside the enumeration")
        adjacency.append(sorted(index[k] for k in row))
    adj_sets = [set(r) for r in adjacency]
    symmetric = all(i in adj_sets[j] for i, row in enumerate(adjacency) for j in row)
    if not symmetric:
        log.warning("move relation on S_{%d,%d} is not symmetric; falling back to forward search", g, n)
    return ClassGraph(g, n, classes, keys, adjacency, symmetric)


@dataclass
class DmaxReport:
    g: int
    n: int
    class_count: int
    dmax: int
    eccentric_witness: CanonicalForm
    histogram: dict[int, int]
    target: Target = Target.ANY_SEPARATING

    def to_json_obj(self) -> dict:
        return {
            "g": self.g,
            "n": self.n,
            "classes": self.class_count,
            "dmax": self.dmax,
            "target": self.target.value,
            "histogram": {str(k): v for k, v in sorted(self.histogram.items())},
            "eccentric_witness": self.eccentric_witness.hex(),
            "eccentric_graph": [list(e) for e in graph_from_key(self.eccentric_witness.key).edges],
        }


def report_from_class_graph(cg: ClassGraph, target: Target = Target.ANY_SEPARATING) -> DmaxReport:
    dist = cg.distances(target)
    if any(d < 0 for d in dist):
        raise IntegrityError(f"some class of S_{{{cg.g},{cg.n}}} never reaches the target set")
    dmax = max(dist)
    hist: dict[int, int] = {}
    for d in dist:
        hist[d] = hist.get(d, 0) + 1
    ecc = next(i for i, d in enumerate(dist) if d == dmax)
    return DmaxReport(cg.g, cg.n, len(cg.classes), dmax, CanonicalForm.from_key(cg.keys[ecc]), hist, target)


def compute_dmax(g: int, n: int, threads: int = 1, cache_dir=None, target: Target = Target.ANY_SEPARATING) -> DmaxReport:
    if target is Target.GENUS_ONLY and g < 2:
        raise PantsError("genus-separating target needs genus >= 2")
    return report_from_class_graph(build_class_graph(g, n, threads=threads, cache_dir=cache_dir), target)


def sample_classes(cg: ClassGraph, k: int, seed: int = 0) -> list[int]:
    rng = random.Random(seed)
    idx = list(range(len(cg.classes)))
    return idx if len(idx) <= k else sorted(rng.sample(idx, k))
