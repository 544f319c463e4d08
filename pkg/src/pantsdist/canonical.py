"""Canonical labeling of small multigraphs.

Individualization-refinement search: an ordered partition is refined by
(cell, neighbor-cell multiplicity) signatures until stable, the first
non-singleton cell is split by individualizing each of its vertices in turn,
and every discrete leaf yields a certificate (upper triangle of the permuted
multiplicity matrix, loops on the diagonal).  The lexicographically smallest
certificate is the key.  Automorphisms discovered as equal certificates prune
sibling branches in the same orbit.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from .multigraph import MultiGraph

CANON_CAP = 40


class CanonicalizationTooLarge(ValueError):
    """Graph exceeds the vertex cap for exact canonical labeling."""


@dataclass(frozen=True)
class CanonicalForm:
    key: bytes
    hash: int

    @classmethod
    def from_key(cls, key: bytes) -> "CanonicalForm":
        digest = hashlib.blake2b(key, digest_size=8).digest()
        return cls(key, int.from_bytes(digest, "little"))

    def __hash__(self):
        return self.hash

    def hex(self) -> str:
        return self.key.hex()


def _refine(cells, nbrs):
    while True:
        cell_of = {}
        for idx, cell in enumerate(cells):
            for v in cell:
                cell_of[v] = idx
        out = []
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            groups: dict = {}
            for v in cell:
                sig = tuple(sorted((cell_of[u], m) for u, m in nbrs[v]))
                groups.setdefault(sig, []).append(v)
            if len(groups) == 1:
                out.append(cell)
            else:
                for sig in sorted(groups):
                    out.append(groups[sig])
        if len(out) == len(cells):
            return out
        cells = out


class _Search:
    def __init__(self, n, mult, nbrs):
        self.n = n
        self.mult = mult
        self.nbrs = nbrs
        self.best_cert = None
        self.best_order = None
        self.automorphisms: list[list[int]] = []

    def certificate(self, order):
        mult = self.mult
        n = self.n
        cert = []
        for i in range(n):
            row = mult[order[i]]
            for j in range(i, n):
                cert.append(row[order[j]])
        return cert

    def leaf(self, cells):
        order = [c[0] for c in cells]
        cert = self.certificate(order)
        if self.best_cert is None or cert < self.best_cert:
            self.best_cert = cert
            self.best_order = order
        elif cert == self.best_cert:
            gamma = [0] * self.n
            for a, b in zip(self.best_order, order):
                gamma[a] = b
            self.automorphisms.append(gamma)

    def run(self, cells, fixed):
        cells = _refine(cells, self.nbrs)
        if len(cells) == self.n:
            self.leaf(cells)
            return
        ti = next(i for i, c in enumerate(cells) if len(c) > 1)
        target = cells[ti]
        explored: list[int] = []
        for v in sorted(target):
            if explored and self._same_orbit(v, explored, fixed):
                continue
            explored.append(v)
            rest = [w for w in target if w != v]
            self.run(cells[:ti] + [[v], rest] + cells[ti + 1 :], fixed + (v,))

    def _same_orbit(self, v, explored, fixed):
        gens = [g for g in self.automorphisms if all(g[f] == f for f in fixed)]
        if not gens:
            return False
        parent = list(range(self.n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for g in gens:
            for a in range(self.n):
                ra, rb = find(a), find(g[a])
                if ra != rb:
                    parent[ra] = rb
        rv = find(v)
        return any(find(u) == rv for u in explored)


def canonical_labeling(g: "MultiGraph") -> tuple[bytes, list[int]]:
    """Return ``(key, order)``: ``order[i]`` is the vertex placed at position i."""
    n = g.vertex_count
    if n > CANON_CAP:
        raise CanonicalizationTooLarge(f"graph with {n} vertices is too large for canonicalization (cap {CANON_CAP})")
    if n > 255 or g.edge_count > 255 * 255:
        raise CanonicalizationTooLarge("graph too large for byte encoding")
    mult = [[0] * n for _ in range(n)]
    for u, v in g.edges:
        if u == v:
            mult[u][u] += 1
        else:
            mult[u][v] += 1
            mult[v][u] += 1
    nbrs = [[(u, mult[v][u]) for u in range(n) if u != v and mult[v][u]] for v in range(n)]
    if n == 0:
        return bytes([0]), []
    initial: dict = {}
    degrees = g.degrees
    for v in range(n):
        initial.setdefault((degrees[v], mult[v][v]), []).append(v)
    cells = [initial[k] for k in sorted(initial)]
    search = _Search(n, mult, nbrs)
    search.run(cells, ())
    cert = search.best_cert
    if max(cert, default=0) > 255:
        raise CanonicalizationTooLarge("edge multiplicity exceeds byte encoding")
    return bytes([n]) + bytes(cert), search.best_order


def canonical_form(g: "MultiGraph") -> CanonicalForm:
    key, _ = canonical_labeling(g)
    return CanonicalForm.from_key(key)


def canonical_graph(g: "MultiGraph") -> "MultiGraph":
    """The canonical representative: ``g`` relabeled by its canonical order."""
    _, order = canonical_labeling(g)
    perm = [0] * g.vertex_count
    for pos, v in enumerate(order):
        perm[v] = pos
    return g.relabel(perm)


def graph_from_key(key: bytes) -> "MultiGraph":
    from .multigraph import MultiGraph

    n = key[0]
    cert = key[1:]
    edges = []
    k = 0
    for i in range(n):
        for j in range(i, n):
            edges.extend([(i, j)] * cert[k])
            k += 1
    return MultiGraph(n, edges)


def is_isomorphic(g: "MultiGraph", h: "MultiGraph") -> bool:
    if g.vertex_count != h.vertex_count or g.edge_count != h.edge_count:
        return False
    if sorted(g.degrees) != sorted(h.degrees):
        return False
    return canonical_labeling(g)[0] == canonical_labeling(h)[0]
