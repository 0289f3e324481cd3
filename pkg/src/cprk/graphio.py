"""
Plain-text graph files.

Format::

    p q            # vertex count, edge count
    u v            # q edge lines, 0-based
    part u label   # optional, one per vertex

Blank lines and ``#`` comments are ignored.
"""

from __future__ import annotations

from pathlib import Path
from typing import Dict, List, Optional, Tuple, Union

from .errors import GraphParseError, InvalidInputError
from .model import GraphSpec


def _ints(tokens: List[str], lineno: int) -> List[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise GraphParseError(f"expected integers, got {' '.join(tokens)!r}", lineno) from None


def parse_graph(text: str) -> GraphSpec:
    lines = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].split()
        if body:
            lines.append((lineno, body))
    if not lines:
        raise GraphParseError("empty graph file", 1)

    lineno, header = lines[0]
    if len(header) != 2:
        raise GraphParseError("header must be 'p q'", lineno)
    p, q = _ints(header, lineno)
    if p < 1 or q < 0:
        raise GraphParseError("need p >= 1 and q >= 0", lineno)

    edges: List[Tuple[int, int]] = []
    labels: Dict[int, str] = {}
    for lineno, tokens in lines[1:]:
        if tokens[0] == "part":
            if len(tokens) != 3:
                raise GraphParseError("partition line must be 'part u label'", lineno)
            (u,) = _ints(tokens[1:2], lineno)
            if not 0 <= u < p:
                raise GraphParseError(f"vertex {u} out of range", lineno)
            if u in labels:
                raise GraphParseError(f"vertex {u} labelled twice", lineno)
            labels[u] = tokens[2]
            continue
        if labels:
            raise GraphParseError("edge lines must precede partition lines", lineno)
        if len(tokens) != 2:
            raise GraphParseError("edge line must be 'u v'", lineno)
        u, v = _ints(tokens, lineno)
        if not (0 <= u < p and 0 <= v < p):
            raise GraphParseError(f"edge ({u}, {v}) has an endpoint out of range", lineno)
        edges.append((u, v))

    last = lines[-1][0]
    if len(edges) != q:
        raise GraphParseError(f"header promises {q} edges, found {len(edges)}", last)
    partition: Optional[Tuple[str, ...]] = None
    if labels:
        if len(labels) != p:
            raise GraphParseError(f"partition labels {len(labels)} of {p} vertices", last)
        partition = tuple(labels[v] for v in range(p))
    try:
        return GraphSpec(p, tuple(edges), partition)
    except InvalidInputError as exc:
        raise GraphParseError(str(exc)) from exc


def read_graph(path: Union[str, Path]) -> GraphSpec:
    return parse_graph(Path(path).read_text(encoding="utf-8"))


def format_graph(graph: GraphSpec) -> str:
    out = [f"{graph.vertex_count} {len(graph.edges)}"]
    out += [f"{u} {v}" for u, v in graph.edges]
    if graph.partition is not None:
        out += [f"part {v} {getattr(lab, 'value', lab)}" for v, lab in enumerate(graph.partition)]
    return "\n".join(out) + "\n"
