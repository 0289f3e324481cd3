"""
Domain types for complete bipartite graphs and their circular drawings.

Vertices of the pink part M carry ids ``0 .. m-1`` and vertices of the black
part N carry ids ``m .. m+n-1``.  An :class:`ArcProfile` lists how many
vertices sit in each arc of the alternating pattern ``M1 N1 M2 N2 ... Mk Nk``
read counterclockwise; empty arcs are allowed, so a profile with ``k`` pink
arcs also describes every alternating drawing with fewer arcs.
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass, field
from itertools import combinations
from typing import Hashable, Iterator, Optional, Sequence, Tuple

from .errors import InvalidInputError, InvalidProfileError


class Color(str, enum.Enum):
    PINK = "pink"
    BLACK = "black"


@dataclass(frozen=True)
class Vertex:
    id: int
    color: Color


@dataclass(frozen=True)
class CompleteBipartiteSpec:
    """The pair ``(m, n)`` naming K_{m,n}."""

    m: int
    n: int

    def __post_init__(self) -> None:
        if not (isinstance(self.m, int) and isinstance(self.n, int)):
            raise InvalidInputError("m and n must be integers")
        if self.m < 1 or self.n < 1:
            raise InvalidInputError(f"K_{{m,n}} needs m, n >= 1 (got m={self.m}, n={self.n})")

    @property
    def vertex_count(self) -> int:
        return self.m + self.n

    def pink_ids(self) -> range:
        return range(self.m)

    def black_ids(self) -> range:
        return range(self.m, self.m + self.n)

    def color_of(self, vertex: int) -> Color:
        return Color.PINK if vertex < self.m else Color.BLACK

    def graph(self) -> "GraphSpec":
        return complete_bipartite_graph(self.m, self.n)


@dataclass(frozen=True, order=True)
class ArcProfile:
    """Arc occupancies ``(m_1..m_k)`` and ``(n_1..n_k)``.

    Ordering compares ``(k, pairs)``, which is the lexicographic order used to
    choose canonical representatives and to sort witnesses.
    """

    k: int
    pairs: Tuple[Tuple[int, int], ...] = field(repr=False)

    def __init__(self, k: int, pink: Sequence[int], black: Sequence[int]) -> None:
        pink = tuple(int(x) for x in pink)
        black = tuple(int(x) for x in black)
        if k < 1:
            raise InvalidProfileError(f"k must be >= 1 (got {k})")
        if len(pink) != k or len(black) != k:
            raise InvalidProfileError(
                f"expected {k} pink and {k} black counts, got {len(pink)} and {len(black)}"
            )
        if any(x < 0 for x in pink + black):
            raise InvalidProfileError("arc counts must be non-negative")
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "pairs", tuple(zip(pink, black)))

    @property
    def pink(self) -> Tuple[int, ...]:
        return tuple(p for p, _ in self.pairs)

    @property
    def black(self) -> Tuple[int, ...]:
        return tuple(b for _, b in self.pairs)

    def __repr__(self) -> str:
        return f"ArcProfile(k={self.k}, pink={self.pink}, black={self.black})"

    def check(self, spec: CompleteBipartiteSpec) -> None:
        """Raise :class:`InvalidProfileError` unless the counts sum to ``(m, n)``."""
        if sum(self.pink) != spec.m or sum(self.black) != spec.n:
            raise InvalidProfileError(
                f"profile sums ({sum(self.pink)}, {sum(self.black)}) "
                f"do not match K_{{{spec.m},{spec.n}}}"
            )

    def symmetries(self) -> Iterator["ArcProfile"]:
        """All 2k images under rotations and reflections of the circle.

        Rotating the circle shifts the (pink, black) pairs.  Mirroring turns
        ``M1 N1 M2 ... Mk Nk`` into ``M1 Nk Mk N(k-1) ... M2 N1``, i.e. pink
        counts ``(m1, mk, ..., m2)`` and black counts ``(nk, ..., n1)``.
        """
        k = self.k
        pink, black = self.pink, self.black
        mirror_pink = tuple(pink[(-i) % k] for i in range(k))
        mirror_black = tuple(black[(-i - 1) % k] for i in range(k))
        for p, b in ((pink, black), (mirror_pink, mirror_black)):
            for r in range(k):
                yield ArcProfile(k, p[r:] + p[:r], b[r:] + b[:r])


@dataclass(frozen=True)
class Arc:
    label: Hashable
    vertices: Tuple[int, ...]


@dataclass(frozen=True)
class CircularDrawing:
    """A cyclic vertex order split into consecutive labelled arcs.

    The order is counterclockwise, starting at the first vertex of the first
    arc.  Arcs may be empty.
    """

    arcs: Tuple[Arc, ...]

    @property
    def order(self) -> Tuple[int, ...]:
        return tuple(v for arc in self.arcs for v in arc.vertices)

    @property
    def vertices(self) -> Tuple[Vertex, ...]:
        return tuple(
            Vertex(v, arc.label) for arc in self.arcs for v in arc.vertices
        )

    @property
    def arc_labels(self) -> Tuple[Hashable, ...]:
        return tuple(arc.label for arc in self.arcs)

    def __len__(self) -> int:
        return sum(len(arc.vertices) for arc in self.arcs)

    def is_valid_for(self, spec: CompleteBipartiteSpec) -> bool:
        """Arc purity plus coverage: every vertex once, each arc one color."""
        order = self.order
        if sorted(order) != list(range(spec.vertex_count)):
            return False
        return all(
            spec.color_of(v) == arc.label for arc in self.arcs for v in arc.vertices
        )


@dataclass(frozen=True)
class GraphSpec:
    """A simple undirected graph on vertices ``0 .. vertex_count-1``.

    ``partition`` optionally assigns a part label to every vertex.
    """

    vertex_count: int
    edges: Tuple[Tuple[int, int], ...]
    partition: Optional[Tuple[Hashable, ...]] = None

    def __post_init__(self) -> None:
        if self.vertex_count < 1:
            raise InvalidInputError("a graph needs at least one vertex")
        seen = set()
        normalized = []
        for u, v in self.edges:
            if u == v:
                raise InvalidInputError(f"loop at vertex {u}")
            if not (0 <= u < self.vertex_count and 0 <= v < self.vertex_count):
                raise InvalidInputError(f"edge ({u}, {v}) has an endpoint out of range")
            e = (min(u, v), max(u, v))
            if e in seen:
                raise InvalidInputError(f"duplicate edge {e}")
            seen.add(e)
            normalized.append(e)
        object.__setattr__(self, "edges", tuple(normalized))
        if self.partition is not None:
            if len(self.partition) != self.vertex_count:
                raise InvalidInputError("partition must label every vertex")
            object.__setattr__(self, "partition", tuple(self.partition))

    def complete_bipartite_sides(self) -> Optional[Tuple[Tuple[int, ...], Tuple[int, ...]]]:
        """Return the two label classes if this is K_{m,n} under its partition."""
        if self.partition is None:
            return None
        labels = list(dict.fromkeys(self.partition))
        if len(labels) != 2:
            return None
        a = tuple(v for v in range(self.vertex_count) if self.partition[v] == labels[0])
        b = tuple(v for v in range(self.vertex_count) if self.partition[v] == labels[1])
        expected = {(min(u, v), max(u, v)) for u in a for v in b}
        if set(self.edges) != expected:
            return None
        return a, b


def complete_bipartite_graph(m: int, n: int) -> GraphSpec:
    spec = CompleteBipartiteSpec(m, n)
    edges = tuple((u, v) for u in spec.pink_ids() for v in spec.black_ids())
    partition = tuple(spec.color_of(v) for v in range(spec.vertex_count))
    return GraphSpec(spec.vertex_count, edges, partition)


def cycle_graph(p: int) -> GraphSpec:
    if p < 3:
        raise InvalidInputError("a cycle needs at least 3 vertices")
    return GraphSpec(p, tuple((i, (i + 1) % p) for i in range(p)))


def complete_graph(p: int) -> GraphSpec:
    return GraphSpec(p, tuple(combinations(range(p), 2)))


def profile_to_drawing(spec: CompleteBipartiteSpec, profile: ArcProfile) -> CircularDrawing:
    """Build the alternating drawing ``M1 N1 ... Mk Nk``, ids ascending within arcs."""
    profile.check(spec)
    pinks = iter(spec.pink_ids())
    blacks = iter(spec.black_ids())
    arcs = []
    for p, b in profile.pairs:
        arcs.append(Arc(Color.PINK, tuple(next(pinks) for _ in range(p))))
        arcs.append(Arc(Color.BLACK, tuple(next(blacks) for _ in range(b))))
    return CircularDrawing(tuple(arcs))


def shuffle_within_arcs(drawing: CircularDrawing, rng: random.Random) -> CircularDrawing:
    """Same arcs, vertices in random order inside each arc."""
    arcs = []
    for arc in drawing.arcs:
        vs = list(arc.vertices)
        rng.shuffle(vs)
        arcs.append(Arc(arc.label, tuple(vs)))
    return CircularDrawing(tuple(arcs))


def canonical_profile(profile: ArcProfile) -> ArcProfile:
    """Least profile in the rotation/reflection orbit of ``profile``."""
    return min(profile.symmetries())
