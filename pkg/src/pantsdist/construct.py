"""High-girth cubic graphs built from towers of cycles.

A tower for girth ``g`` stacks cycles of length ``g`` (or ``g + 1``) and joins
each consecutive pair by two vertical edges whose endpoints on a cycle sit
``g // 2`` apart.  The completion adds edges between valence-2 tower vertices
at distance at least ``g - 1``; when no such pair is left it trades one added
edge ``w - w'`` for two edges ``x - w'`` and ``w - y``.  Every insertion is
checked against the girth bound before it is made.
"""

from __future__ import annotations

from collections import deque
from dataclasses import asdict, dataclass, field

from .metrics import min_nontrivial_connected_cutset
from .multigraph import MultiGraph, girth, is_connected
from .pants import PantsGraph, validate

TOWER_MIN_VERTICES = 140


class ConstructionError(RuntimeError):
    """Internal invariant of the construction failed; output must not be used."""


def tower_cycle_count(g: int) -> int:
    """``ceil((2**g - 4) / (g - 4))``."""
    return -(-(2**g - 4) // (g - 4))


def tower_vertex_count(g: int) -> int:
    total = tower_cycle_count(g) * g
    return total + total % 2


@dataclass
class TowerLayout:
    g: int
    cycle_lengths: list[int]
    vertical_pairs: list[tuple[tuple[int, int], tuple[int, int]]]
    offsets: list[int]

    def vertex_index(self, cycle: int, position: int) -> int:
        return self.offsets[cycle] + position % self.cycle_lengths[cycle]

    @property
    def vertex_count(self) -> int:
        return sum(self.cycle_lengths)


def _tower(g: int, lengths: list[int]) -> tuple[MultiGraph, TowerLayout]:
    half = g // 2
    offsets = []
    acc = 0
    for length in lengths:
        offsets.append(acc)
        acc += length
    layout = TowerLayout(g, list(lengths), [], offsets)
    edges = []
    for c, length in enumerate(lengths):
        base = offsets[c]
        edges.extend((base + i, base + (i + 1) % length) for i in range(length))
    for c in range(len(lengths) - 1):
        up = (1, 1 + half)
        down = (0, half)
        layout.vertical_pairs.append((up, down))
        for a, b in zip(up, down):
            edges.append((layout.vertex_index(c, a), layout.vertex_index(c + 1, b)))
    return MultiGraph(acc, edges), layout


def build_tower(g: int) -> tuple[MultiGraph, TowerLayout]:
    if g < 5:
        raise ValueError(f"tower needs girth parameter g >= 5, got {g}")
    count = tower_cycle_count(g)
    lengths = [g] * count
    if count * g % 2:
        lengths[-1] += 1
    return _tower(g, lengths)


def gamma_girth(two_m: int) -> int:
    """Largest ``g >= 5`` whose tower fits in ``two_m`` vertices."""
    g = 5
    while tower_cycle_count(g + 1) * (g + 1) <= two_m:
        g += 1
    return g


def gamma_tower(two_m: int) -> tuple[MultiGraph, TowerLayout]:
    if two_m % 2 or two_m < TOWER_MIN_VERTICES:
        raise ValueError(f"vertex count must be even and >= {TOWER_MIN_VERTICES}, got {two_m}")
    g = gamma_girth(two_m)
    count, rem = divmod(two_m, g)
    lengths = [g + 1] * rem + [g] * (count - rem)
    return _tower(g, lengths)


# ---------------------------------------------------------------------------
# completion


def _ball(adj, source: int, radius: int) -> dict[int, int]:
    dist = {source: 0}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        du = dist[u]
        if du == radius:
            continue
        for w in adj[u]:
            if w not in dist:
                dist[w] = du + 1
                queue.append(w)
    return dist


def _far(adj, a: int, b: int, at_least: int) -> bool:
    """True iff dist(a, b) >= at_least."""
    return b not in _ball(adj, a, at_least - 1)


@dataclass
class CompletionTrace:
    step_one: list[tuple[int, int]] = field(default_factory=list)
    step_three: list[dict] = field(default_factory=list)


def complete_tower_traced(tower: MultiGraph, layout: TowerLayout) -> tuple[MultiGraph, CompletionTrace]:
    g = layout.g
    n = tower.vertex_count
    if tower.max_degree > 3 or not tower.is_simple():
        raise ValueError("tower must be simple and at most cubic")
    adj = [set(s) for s in tower.neighbor_sets]
    v2_tower = [v for v in range(n) if tower.degrees[v] == 2]
    partner: dict[int, int] = {}
    trace = CompletionTrace()

    def add(a, b):
        if not _far(adj, a, b, g - 1):
            raise ConstructionError(f"edge {a}-{b} would close a cycle shorter than {g}")
        adj[a].add(b)
        adj[b].add(a)
        partner[a] = b
        partner[b] = a

    # steps one and two: distances only shrink, so one pass exhausts them
    for v in v2_tower:
        if len(adj[v]) != 2:
            continue
        near = _ball(adj, v, g - 2)
        x = next((u for u in v2_tower if u != v and len(adj[u]) == 2 and u not in near), None)
        if x is not None:
            add(v, x)
            trace.step_one.append((v, x))

    # steps three and four
    guard = 3 * n // 2
    while True:
        low = [v for v in v2_tower if len(adj[v]) == 2]
        if not low:
            break
        if len(low) < 2 or guard == 0:
            raise ConstructionError("completion cannot proceed")
        guard -= 1
        x, y = low[0], low[1]
        bx = _ball(adj, x, g - 2)
        by = _ball(adj, y, g - 2)
        chosen = None
        for w in v2_tower:
            if w in bx or w in by:
                continue
            if len(adj[w]) != 3:
                raise ConstructionError(f"vertex {w} far from {x}, {y} still has valence 2")
            wp = partner[w]
            if wp not in bx and _far(adj, x, wp, g - 1):
                chosen = (w, wp, x, y)
                break
            if wp not in by and _far(adj, y, wp, g - 1):
                chosen = (w, wp, y, x)
                break
        if chosen is None:
            raise ConstructionError(f"no exchange vertex available for {x}, {y}")
        w, wp, xs, ys = chosen
        adj[w].discard(wp)
        adj[wp].discard(w)
        del partner[w], partner[wp]
        add(xs, wp)
        add(w, ys)
        trace.step_three.append({"x": xs, "y": ys, "w": w, "w_prime": wp})

    edges = {(min(a, b), max(a, b)) for a in range(n) for b in adj[a]}
    out = MultiGraph(n, sorted(edges))
    if any(d != 3 for d in out.degrees):
        raise ConstructionError("completion is not 3-regular")
    if not set(tower.edges) <= set(out.edges):
        raise ConstructionError("completion dropped a tower edge")
    found = girth(out)
    if found != g:
        raise ConstructionError(f"completion has girth {found}, expected {g}")
    return out, trace


def complete_tower(tower: MultiGraph, layout: TowerLayout) -> MultiGraph:
    return complete_tower_traced(tower, layout)[0]


def build_gamma(two_m: int) -> MultiGraph:
    tower, layout = gamma_tower(two_m)
    return complete_tower(tower, layout)


# ---------------------------------------------------------------------------
# boundaries and certificates


def add_spaced_boundaries(graph: MultiGraph, n: int, g: int | None = None) -> PantsGraph:
    """Subdivide ``n`` edges so the new vertices are pairwise more than ``g // 2`` apart."""
    if g is None:
        g = int(girth(graph))
    half = g // 2
    current = graph
    added: list[int] = []
    dists = []
    original = list(graph.edges)
    used = set()
    for idx, (u, v) in enumerate(original):
        if len(added) == n:
            break
        if idx in used:
            continue
        if all(1 + min(d[u], d[v]) > half for d in dists):
            x = current.vertex_count
            edges = list(current.edges)
            edges.remove((u, v))
            current = MultiGraph(x + 1, edges + [(u, x), (x, v)])
            used.add(idx)
            added.append(x)
            dists = [current.distances_from(a) for a in added]
    if len(added) < n:
        raise ValueError(f"cannot place {n} boundary vertices pairwise more than {half} apart")
    return validate(current)


@dataclass
class ConstructionReport:
    vertices: int
    regular3: bool
    girth_found: int | None
    valence2_count_tower: int | None
    cutset_cleared_to: int | None
    passed: bool
    tower_is_subgraph: bool | None = None

    def to_json_obj(self) -> dict:
        return asdict(self)


def verify_construction(graph: MultiGraph, g: int, tower: MultiGraph | None = None) -> ConstructionReport:
    regular3 = graph.vertex_count > 0 and all(d == 3 for d in graph.degrees)
    gf = girth(graph)
    girth_found = None if gf == float("inf") else int(gf)
    v2 = None
    sub = None
    if tower is not None:
        sub = tower.vertex_count == graph.vertex_count and set(tower.edges) <= set(graph.edges)
        if sub:
            v2 = sum(1 for d in tower.degrees if d == 2)
    cap = g // 2 - 1
    cleared = None
    if is_connected(graph):
        if cap <= 0:
            cleared = 0
        else:
            res = min_nontrivial_connected_cutset(graph, cap)
            cleared = cap if res.size is None else res.size - 1
    passed = bool(
        regular3
        and girth_found == g
        and v2 is not None
        and v2 >= 2**g
        and cleared is not None
        and cleared >= cap
    )
    return ConstructionReport(graph.vertex_count, regular3, girth_found, v2, cleared, passed, sub)
