"""LCF notation and a handful of named small graphs.

``[j1, ..., jk]^m`` is the cubic Hamiltonian graph on ``n = k * m`` vertices
made of the cycle ``0 - 1 - ... - (n-1) - 0`` plus a chord from ``i`` to
``i + j_{i mod k}`` (mod n).  Negative jumps count backwards.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .multigraph import MultiGraph


class LcfError(ValueError):
    pass


_LCF_RE = re.compile(r"^\s*\[\s*([^\]]*)\]\s*(?:\^\s*(\d+))?\s*$")


@dataclass(frozen=True)
class LcfCode:
    jumps: tuple[int, ...]
    exponent: int = 1

    @property
    def order(self) -> int:
        return len(self.jumps) * self.exponent

    def __str__(self):
        body = "[" + ",".join(str(j) for j in self.jumps) + "]"
        return body if self.exponent == 1 else f"{body}^{self.exponent}"


def parse_lcf_code(text: str) -> LcfCode:
    # unicode minus shows up in copied notation
    text = text.replace("−", "-")
    m = _LCF_RE.match(text)
    if not m:
        raise LcfError(f"not LCF notation: {text!r}")
    body, exp = m.groups()
    try:
        jumps = tuple(int(tok) for tok in body.split(",") if tok.strip())
    except ValueError:
        raise LcfError(f"bad jump list in {text!r}") from None
    if not jumps:
        raise LcfError("empty jump list")
    exponent = int(exp) if exp is not None else 1
    if exponent < 1:
        raise LcfError("exponent must be >= 1")
    return LcfCode(jumps, exponent)


def lcf_graph(code: LcfCode) -> MultiGraph:
    n = code.order
    if n < 3:
        raise LcfError(f"LCF graph needs at least 3 vertices, got {n}")
    k = len(code.jumps)
    target = []
    for i in range(n):
        j = code.jumps[i % k]
        if not 2 <= abs(j) <= n - 2:
            raise LcfError(f"jump {j} out of range for {n} vertices")
        target.append((i + j) % n)
    for i, t in enumerate(target):
        if target[t] != i:
            raise LcfError(f"chord from {i} lands on {t}, whose chord returns to {target[t]} (involution fails)")
    edges = {(i, (i + 1) % n) if i < (i + 1) % n else ((i + 1) % n, i) for i in range(n)}
    chords = {(min(i, t), max(i, t)) for i, t in enumerate(target)}
    if edges & chords:
        raise LcfError("chord duplicates a cycle edge")
    g = MultiGraph(n, sorted(edges) + sorted(chords))
    if not g.is_simple() or any(d != 3 for d in g.degrees):
        raise LcfError("LCF code does not describe a simple cubic graph")
    return g


def parse_lcf(text: str) -> MultiGraph:
    return lcf_graph(parse_lcf_code(text))


def petersen() -> MultiGraph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return MultiGraph(10, outer + spokes + inner)


def _cube() -> MultiGraph:
    return MultiGraph(8, [(a, b) for a in range(8) for b in range(a + 1, 8) if bin(a ^ b).count("1") == 1])


def _wagner() -> MultiGraph:
    return MultiGraph(8, [(i, (i + 1) % 8) for i in range(8)] + [(i, i + 4) for i in range(4)])


NAMED = {
    "k4": lambda: MultiGraph(4, [(a, b) for a in range(4) for b in range(a + 1, 4)]),
    "k33": lambda: MultiGraph(6, [(a, b) for a in range(3) for b in range(3, 6)]),
    "petersen": petersen,
    "heawood": lambda: parse_lcf("[5,-5]^7"),
    "theta": lambda: MultiGraph(2, [(0, 1)] * 3),
    "dumbbell": lambda: MultiGraph(2, [(0, 0), (0, 1), (1, 1)]),
    "cube": _cube,
    "wagner": _wagner,
}


def named_graph(name: str) -> MultiGraph:
    try:
        return NAMED[name.lower()]()
    except KeyError:
        raise LcfError(f"unknown graph name {name!r}; choose from {', '.join(sorted(NAMED))}") from None
