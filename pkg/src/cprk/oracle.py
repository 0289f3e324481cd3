"""
Brute-force ground truth for circular and circular k-partite crossing numbers.

Nothing here uses the closed forms: every value is a minimum of geometric
chord-crossing counts over explicitly enumerated cyclic vertex orders.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Callable, Iterator, Optional, Sequence, Tuple

from .chords import CrossingCount, crossings_in_order, disjoint_edge_pairs
from .errors import InvalidInputError, ResourceLimitError
from .model import GraphSpec


@dataclass(frozen=True)
class OracleConfig:
    """Search budget and switches.

    ``exhaustive`` forces full enumeration of vertex orders even for complete
    bipartite inputs, where by default only color patterns are enumerated.
    """

    max_vertices: int = 10
    dedup_symmetry: bool = True
    exhaustive: bool = False

    def __post_init__(self) -> None:
        if self.max_vertices < 1:
            raise InvalidInputError("max_vertices must be >= 1")


def cyclic_orders(p: int, dedup_symmetry: bool = True) -> Iterator[Tuple[int, ...]]:
    """Cyclic orders of ``0 .. p-1``.

    With symmetry reduction, vertex 0 is pinned to the first slot and of each
    mirror pair only the one with ``order[1] < order[-1]`` is kept, giving
    ``(p-1)!/2`` orders for ``p >= 3``.
    """
    if not dedup_symmetry:
        yield from permutations(range(p))
        return
    if p <= 2:
        yield tuple(range(p))
        return
    for rest in permutations(range(1, p)):
        if rest[0] < rest[-1]:
            yield (0,) + rest


def _check_budget(graph: GraphSpec, config: OracleConfig) -> None:
    if graph.vertex_count > config.max_vertices:
        raise ResourceLimitError(
            f"{graph.vertex_count} vertices exceed the oracle budget of {config.max_vertices}"
        )


def _cyclic_runs(labels: Sequence) -> int:
    """Maximal runs of equal labels around the circle."""
    p = len(labels)
    if p == 0:
        return 0
    changes = sum(labels[i] != labels[i - 1] for i in range(p))
    return max(changes, 1)


def _min_independent_arcs(order: Sequence[int], adjacent: Callable[[int, int], bool]) -> int:
    """Fewest consecutive independent segments covering the cyclic order."""
    p = len(order)
    best = p
    for start in range(p):
        arcs, current = 1, [order[start]]
        for step in range(1, p):
            v = order[(start + step) % p]
            if any(adjacent(u, v) for u in current):
                arcs += 1
                current = [v]
            else:
                current.append(v)
        best = min(best, arcs)
    return best


def arcs_needed(order: Sequence[int], graph: GraphSpec) -> int:
    """Fewest arcs a drawing with this cyclic order must be split into.

    With a partition, each arc must hold a single part label; without one,
    each arc must be an independent set.
    """
    if graph.partition is not None:
        return _cyclic_runs([graph.partition[v] for v in order])
    edges = set(graph.edges)
    return _min_independent_arcs(order, lambda u, v: (min(u, v), max(u, v)) in edges)


def _minimize(
    orders: Iterator[Tuple[int, ...]],
    graph: GraphSpec,
    accept: Callable[[Tuple[int, ...]], bool],
) -> CrossingCount:
    pairs = disjoint_edge_pairs(graph)
    p = graph.vertex_count
    best: Optional[CrossingCount] = None
    for order in orders:
        if not accept(order):
            continue
        value = crossings_in_order(order, pairs, p)
        if best is None or value < best.value:
            best = CrossingCount(value, tuple(order))
            if value == 0:
                break
    if best is None:
        raise InvalidInputError("no admissible drawing exists")
    return best


def brute_force_outerplanar(graph: GraphSpec, config: OracleConfig = OracleConfig()) -> CrossingCount:
    """Minimum chord crossings over every cyclic order of the vertices."""
    _check_budget(graph, config)
    return _minimize(cyclic_orders(graph.vertex_count, config.dedup_symmetry), graph, lambda o: True)


def _bipartite_pattern_orders(
    pink: Sequence[int], black: Sequence[int], dedup_symmetry: bool
) -> Iterator[Tuple[int, ...]]:
    # One order per cyclic color pattern; ids ascend within each color.
    p = len(pink) + len(black)
    seen = set()
    for slots in combinations(range(p), len(pink)):
        pattern = [0] * p
        for s in slots:
            pattern[s] = 1
        if dedup_symmetry:
            images = []
            for seq in (pattern, pattern[::-1]):
                images.extend(tuple(seq[r:] + seq[:r]) for r in range(p))
            key = min(images)
            if key in seen:
                continue
            seen.add(key)
        pinks, blacks = iter(pink), iter(black)
        yield tuple(next(pinks) if c else next(blacks) for c in pattern)


def brute_force_cpr(graph: GraphSpec, k: int, config: OracleConfig = OracleConfig()) -> CrossingCount:
    """Minimum chord crossings over circular drawings split into ``k`` arcs.

    Arcs may be empty, parts may occupy several arcs, and the arcs may appear in
    any order around the circle.
    """
    if graph.partition is None:
        raise InvalidInputError("brute_force_cpr needs partition labels")
    if k < 1 or k > graph.vertex_count:
        raise InvalidInputError(f"k must satisfy 1 <= k <= {graph.vertex_count} (got {k})")
    _check_budget(graph, config)

    def accept(order: Tuple[int, ...]) -> bool:
        return arcs_needed(order, graph) <= k

    sides = graph.complete_bipartite_sides()
    if sides is not None and not config.exhaustive:
        orders = _bipartite_pattern_orders(sides[0], sides[1], config.dedup_symmetry)
    else:
        orders = cyclic_orders(graph.vertex_count, config.dedup_symmetry)
    return _minimize(orders, graph, accept)


def brute_force_chromatic_cpr(graph: GraphSpec, k: int, config: OracleConfig = OracleConfig()) -> CrossingCount:
    """Like :func:`brute_force_cpr` but arcs need only be independent sets.

    Used for unlabelled graphs, where any proper assignment to ``k`` parts is
    allowed.
    """
    if k < 1 or k > graph.vertex_count:
        raise InvalidInputError(f"k must satisfy 1 <= k <= {graph.vertex_count} (got {k})")
    _check_budget(graph, config)
    unlabelled = GraphSpec(graph.vertex_count, graph.edges)
    return _minimize(
        cyclic_orders(graph.vertex_count, config.dedup_symmetry),
        unlabelled,
        lambda o: arcs_needed(o, unlabelled) <= k,
    )

