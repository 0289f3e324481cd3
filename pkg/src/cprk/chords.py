"""Crossing counts for graphs drawn with vertices on a circle and chords as edges."""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from .errors import InvalidInputError
from .model import CircularDrawing, GraphSpec


@dataclass(frozen=True)
class CrossingCount:
    value: int
    order: Optional[Tuple[int, ...]] = None

    def __int__(self) -> int:
        return self.value


def chords_cross(a: int, b: int, c: int, d: int) -> bool:
    """True iff chord ``{a, b}`` crosses chord ``{c, d}``.

    Arguments are positions in one cyclic order.  The chords cross exactly when
    one of ``c, d`` lies strictly inside the arc running from ``a`` to ``b``.
    """
    if len({a, b, c, d}) != 4:
        raise InvalidInputError(f"positions must be distinct, got {(a, b, c, d)}")
    lo, hi = (a, b) if a < b else (b, a)
    return (lo < c < hi) != (lo < d < hi)


def disjoint_edge_pairs(graph: GraphSpec) -> List[Tuple[int, int, int, int]]:
    """Edge pairs that share no endpoint; only these can cross."""
    edges = graph.edges
    out = []
    for i, (a, b) in enumerate(edges):
        for c, d in edges[i + 1:]:
            if a != c and a != d and b != c and b != d:
                out.append((a, b, c, d))
    return out


def crossings_in_order(
    order: Sequence[int], pairs: Sequence[Tuple[int, int, int, int]], vertex_count: int
) -> int:
    """Hot loop of the oracle: count crossing pairs for one cyclic order."""
    pos = [0] * vertex_count
    for i, v in enumerate(order):
        pos[v] = i
    total = 0
    for a, b, c, d in pairs:
        pa, pb = pos[a], pos[b]
        if pa > pb:
            pa, pb = pb, pa
        if (pa < pos[c] < pb) != (pa < pos[d] < pb):
            total += 1
    return total


def count_crossings(drawing: CircularDrawing, graph: GraphSpec) -> CrossingCount:
    order = drawing.order
    if len(order) != graph.vertex_count or set(order) != set(range(graph.vertex_count)):
        raise InvalidInputError("drawing and graph have different vertex sets")
    value = crossings_in_order(order, disjoint_edge_pairs(graph), graph.vertex_count)
    return CrossingCount(value, order)
