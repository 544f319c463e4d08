"""Elementary move E2 acting on pants decomposition graphs.

Two adjacent vertices ``v1``, ``v2`` joined by a pivot edge bound a four-holed
sphere.  The move keeps the pivot and exchanges one slot of ``v1`` with one
slot of ``v2``, where a slot is either an edge-end other than the pivot's or
an empty (surface boundary) slot.  Edge-ends are named by edge index: the end
of edge ``slot1`` sitting at ``v1`` is moved to ``v2`` and the end of edge
``slot2`` sitting at ``v2`` is moved to ``v1``.  ``None`` is an empty slot.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .canonical import CanonicalForm, canonical_form
from .multigraph import MultiGraph, is_connected
from .pants import PantsGraph, PantsError, validate


class IllegalMove(PantsError):
    """Edit is malformed or its result is not a connected at most cubic graph."""


@dataclass(frozen=True, order=True)
class MoveEdit:
    v1: int
    v2: int
    pivot: int
    slot1: int | None
    slot2: int | None

    def to_json_obj(self, g: MultiGraph) -> dict:
        def edge(idx):
            if idx is None:
                return None
            u, v = g.edges[idx]
            return [u, v, idx]

        return {"v1": self.v1, "v2": self.v2, "pivot": edge(self.pivot), "slot1": edge(self.slot1), "slot2": edge(self.slot2)}

    @classmethod
    def from_json_obj(cls, obj: dict) -> "MoveEdit":
        def idx(x):
            return None if x is None else int(x[2])

        return cls(int(obj["v1"]), int(obj["v2"]), int(obj["pivot"][2]), idx(obj["slot1"]), idx(obj["slot2"]))


def _check(g: MultiGraph, m: MoveEdit) -> None:
    n = g.vertex_count
    if not (0 <= m.v1 < n and 0 <= m.v2 < n) or m.v1 == m.v2:
        raise IllegalMove(f"pivot vertices {m.v1}, {m.v2} invalid")
    if not 0 <= m.pivot < g.edge_count or sorted(g.edges[m.pivot]) != sorted((m.v1, m.v2)):
        raise IllegalMove(f"edge {m.pivot} does not join {m.v1} and {m.v2}")
    if m.slot1 is None and m.slot2 is None:
        raise IllegalMove("both slots empty (identity edit)")
    for slot, v, other in ((m.slot1, m.v1, m.v2), (m.slot2, m.v2, m.v1)):
        if slot is None:
            if g.degrees[v] >= 3:
                raise IllegalMove(f"no empty slot at vertex {v}: vertex {other} would reach degree 4")
            continue
        if slot == m.pivot or not 0 <= slot < g.edge_count or v not in g.edges[slot]:
            raise IllegalMove(f"edge {slot} has no movable end at vertex {v}")


def _moved_edges(g: MultiGraph, m: MoveEdit) -> list[tuple[int, int]]:
    edges = list(g.edges)
    if m.slot1 is not None and m.slot1 == m.slot2:
        # the same v1-v2 edge swaps both of its ends: unchanged
        return edges
    for slot, src, dst in ((m.slot1, m.v1, m.v2), (m.slot2, m.v2, m.v1)):
        if slot is None:
            continue
        a, b = edges[slot]
        edges[slot] = (dst, b) if a == src else (a, dst)
    return edges


def apply_move(p: PantsGraph, m: MoveEdit) -> PantsGraph:
    g = p.graph
    _check(g, m)
    h = MultiGraph(g.vertex_count, _moved_edges(g, m))
    if h.max_degree > 3:
        raise IllegalMove("result has a vertex of degree 4")
    if not is_connected(h):
        raise IllegalMove("result is disconnected")
    out = validate(h)
    assert out.signature == p.signature
    return out


def iter_edits(g: MultiGraph) -> Iterator[MoveEdit]:
    """All well-formed edits, ordered by (v1, v2, pivot, slot1, slot2), empty last."""
    inc = g.incidence
    degs = g.degrees
    for pivot, (v1, v2) in enumerate(g.edges):
        if v1 == v2:
            continue
        s1 = sorted({eid for _, eid in inc[v1] if eid != pivot})
        s2 = sorted({eid for _, eid in inc[v2] if eid != pivot})
        opts1: list[int | None] = list(s1) + ([None] if degs[v1] < 3 else [])
        opts2: list[int | None] = list(s2) + ([None] if degs[v2] < 3 else [])
        for a in opts1:
            for b in opts2:
                if a is None and b is None:
                    continue
                yield MoveEdit(v1, v2, pivot, a, b)


def legal_moves(p: PantsGraph) -> Iterator[tuple[MoveEdit, PantsGraph]]:
    for m in iter_edits(p.graph):
        try:
            yield m, apply_move(p, m)
        except IllegalMove:
            continue


def neighbor_map(p: PantsGraph) -> dict[CanonicalForm, tuple[MoveEdit, PantsGraph]]:
    """One representative edit per isomorphism class one move away, excluding ``p``'s class."""
    own = canonical_form(p.graph)
    out: dict[CanonicalForm, tuple[MoveEdit, PantsGraph]] = {}
    seen: set[MultiGraph] = set()
    for m, q in legal_moves(p):
        if q.graph in seen:
            continue
        seen.add(q.graph)
        cf = canonical_form(q.graph)
        if cf == own or cf in out:
            continue
        out[cf] = (m, q)
    return out


def neighbors(p: PantsGraph) -> list[PantsGraph]:
    return [q for _, q in neighbor_map(p).values()]
