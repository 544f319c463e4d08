"""Undirected multigraphs with loops and parallel edges.

``MultiGraph`` is an immutable value: a vertex count plus a sorted tuple of
edges ``(u, v)`` with ``u <= v``.  A loop is stored as ``(v, v)`` and
contributes 2 to the degree of ``v``.  Cycle lengths are counted in edges, so
a loop has length 1 and a parallel pair has length 2.
"""

from __future__ import annotations

import math
from collections import Counter
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from . import _kernels

INFINITY = math.inf


class GraphError(ValueError):
    """Raised for malformed graph data."""


class MultiGraph:
    """Immutable undirected multigraph on vertices ``0 .. vertex_count-1``."""

    __slots__ = ("_n", "_edges", "__dict__")

    def __init__(self, vertex_count: int, edges: Iterable[Sequence[int]] = ()):
        n = int(vertex_count)
        if n < 0:
            raise GraphError(f"negative vertex count {n}")
        norm = []
        for e in edges:
            if len(e) != 2:
                raise GraphError(f"edge {e!r} does not have two endpoints")
            u, v = int(e[0]), int(e[1])
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) has an endpoint outside [0, {n})")
            norm.append((u, v) if u <= v else (v, u))
        norm.sort()
        object.__setattr__(self, "_n", n)
        object.__setattr__(self, "_edges", tuple(norm))

    def __setattr__(self, name, value):
        if name in ("_n", "_edges"):
            raise AttributeError("MultiGraph is immutable")
        object.__setattr__(self, name, value)

    @property
    def vertex_count(self) -> int:
        return self._n

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return self._edges

    @property
    def edge_count(self) -> int:
        return len(self._edges)

    def __len__(self) -> int:
        return self._n

    def __eq__(self, other):
        if not isinstance(other, MultiGraph):
            return NotImplemented
        return self._n == other._n and self._edges == other._edges

    def __hash__(self):
        return hash((self._n, self._edges))

    def __reduce__(self):
        # caches are rebuilt on demand; pickle only the defining data
        return (MultiGraph, (self._n, self._edges))

    def __repr__(self):
        return f"MultiGraph({self._n}, {list(self._edges)})"

    # -- derived structure (computed once, cached on the instance)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        deg = [0] * self._n
        for u, v in self._edges:
            deg[u] += 1
            deg[v] += 1
        return tuple(deg)

    @cached_property
    def loop_counts(self) -> tuple[int, ...]:
        loops = [0] * self._n
        for u, v in self._edges:
            if u == v:
                loops[u] += 1
        return tuple(loops)

    @cached_property
    def incidence(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        """Per vertex, the ``(neighbor, edge_index)`` pairs; a loop appears twice."""
        inc: list[list[tuple[int, int]]] = [[] for _ in range(self._n)]
        for i, (u, v) in enumerate(self._edges):
            inc[u].append((v, i))
            inc[v].append((u, i))
        return tuple(tuple(row) for row in inc)

    @cached_property
    def neighbor_sets(self) -> tuple[frozenset, ...]:
        return tuple(frozenset(w for w, _ in row if w != v) for v, row in enumerate(self.incidence))

    @cached_property
    def csr(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        indptr = np.zeros(self._n + 1, dtype=np.int64)
        for row_i, row in enumerate(self.incidence):
            indptr[row_i + 1] = indptr[row_i] + len(row)
        indices = np.fromiter((w for row in self.incidence for w, _ in row), dtype=np.int64, count=int(indptr[-1]))
        edge_ids = np.fromiter((i for row in self.incidence for _, i in row), dtype=np.int64, count=int(indptr[-1]))
        return indptr, indices, edge_ids

    @property
    def max_degree(self) -> int:
        return max(self.degrees, default=0)

    def degree(self, v: int) -> int:
        return self.degrees[v]

    def has_loop(self) -> bool:
        return any(u == v for u, v in self._edges)

    def has_parallel(self) -> bool:
        return any(c > 1 for (u, v), c in Counter(self._edges).items() if u != v)

    def is_simple(self) -> bool:
        return not self.has_loop() and not self.has_parallel()

    # -- edits returning new graphs

    def relabel(self, perm: Sequence[int]) -> "MultiGraph":
        """Graph with vertex ``v`` renamed ``perm[v]``."""
        return MultiGraph(self._n, [(perm[u], perm[v]) for u, v in self._edges])

    def with_edges(self, edges: Iterable[Sequence[int]], vertex_count: int | None = None) -> "MultiGraph":
        return MultiGraph(self._n if vertex_count is None else vertex_count, edges)

    def remove_edge_index(self, idx: int) -> "MultiGraph":
        return MultiGraph(self._n, self._edges[:idx] + self._edges[idx + 1 :])

    def add_edges(self, *new: Sequence[int]) -> "MultiGraph":
        return MultiGraph(self._n, self._edges + tuple(new))

    def delete_vertices(self, doomed: Iterable[int]) -> tuple["MultiGraph", list[int]]:
        """Induced subgraph on the surviving vertices, renumbered in order.

        Returns the graph and the list mapping new index -> old vertex.
        """
        doomed = set(doomed)
        keep = [v for v in range(self._n) if v not in doomed]
        index = {v: i for i, v in enumerate(keep)}
        edges = [(index[u], index[v]) for u, v in self._edges if u in index and v in index]
        return MultiGraph(len(keep), edges), keep

    # -- metric helpers

    def distances_from(self, source: int) -> np.ndarray:
        indptr, indices, _ = self.csr
        return _kernels.bfs_distances(indptr, indices, source)

    def components(self, removed: Iterable[int] = ()) -> list[list[int]]:
        """Connected components of the graph with ``removed`` vertices deleted."""
        indptr, indices, _ = self.csr
        mask = np.zeros(self._n, dtype=np.bool_)
        for v in removed:
            mask[v] = True
        labels, count = _kernels.component_labels(indptr, indices, mask)
        comps: list[list[int]] = [[] for _ in range(count)]
        for v, lab in enumerate(labels):
            if lab >= 0:
                comps[lab].append(v)
        return comps


def is_connected(g: MultiGraph) -> bool:
    if g.vertex_count <= 1:
        return True
    return len(g.components()) == 1


def component_count(g: MultiGraph) -> int:
    return len(g.components())


def girth(g: MultiGraph) -> float | int:
    """Length of a shortest cycle (loop = 1, parallel pair = 2); ``inf`` if acyclic."""
    if g.edge_count == 0:
        return INFINITY
    if g.has_loop():
        return 1
    indptr, indices, edge_ids = g.csr
    best = _kernels.girth_kernel(indptr, indices, edge_ids)
    return INFINITY if best == _kernels.NO_CYCLE else int(best)


def cycle_rank(g: MultiGraph) -> int:
    return g.edge_count - g.vertex_count + component_count(g)


def is_acyclic(g: MultiGraph) -> bool:
    return cycle_rank(g) == 0


def diameter(g: MultiGraph) -> float | int:
    if g.vertex_count == 0:
        return 0
    worst = 0
    for v in range(g.vertex_count):
        d = g.distances_from(v)
        if (d < 0).any():
            return INFINITY
        worst = max(worst, int(d.max()))
    return worst


def is_bipartite(g: MultiGraph) -> bool:
    color = [-1] * g.vertex_count
    for s in range(g.vertex_count):
        if color[s] != -1:
            continue
        color[s] = 0
        stack = [s]
        while stack:
            u = stack.pop()
            for w, _ in g.incidence[u]:
                if color[w] == -1:
                    color[w] = 1 - color[u]
                    stack.append(w)
                elif color[w] == color[u]:
                    return False
    return True


# canonical forms live in their own module but are part of this surface
from .canonical import CanonicalForm, CanonicalizationTooLarge, canonical_form, is_isomorphic  # noqa: E402

__all__ = [
    "INFINITY",
    "CanonicalForm",
    "CanonicalizationTooLarge",
    "GraphError",
    "MultiGraph",
    "canonical_form",
    "component_count",
    "cycle_rank",
    "diameter",
    "girth",
    "is_acyclic",
    "is_bipartite",
    "is_connected",
    "is_isomorphic",
]
