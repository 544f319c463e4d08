"""Shared, memoized class graphs for the cells exercised by the acceptance checks."""

from functools import lru_cache

from pantsdist import MultiGraph
from pantsdist.search import build_class_graph

# every cell with a published value that the acceptance criteria name
ACCEPTANCE_CELLS = [(0, 6), (0, 7), (1, 3), (1, 4), (2, 0), (2, 1), (2, 2), (2, 3), (3, 0), (3, 1), (3, 2), (4, 0), (2, 7)]
SMALL_CELLS = [c for c in ACCEPTANCE_CELLS if 2 * c[0] - 2 + c[1] <= 6]


@lru_cache(maxsize=None)
def class_graph(g, n):
    return build_class_graph(g, n)


def random_relabel(g, rng):
    """Isomorphic copy with shuffled labels, edge order and endpoint order."""
    perm = list(range(g.vertex_count))
    rng.shuffle(perm)
    h = g.relabel(perm)
    edges = list(h.edges)
    rng.shuffle(edges)
    return MultiGraph(h.vertex_count, [(v, u) if rng.random() < 0.5 else (u, v) for u, v in edges])
