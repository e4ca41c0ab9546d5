"""Plain-text edge-list format.

::

    # comment
    n 4
    0 1 1
    1 2 -0.5

The first non-comment line declares the vertex count; every further line
holds ``u v w`` with 0-based endpoints (``w`` may be omitted for weight 1).
Weights are written with 17 significant digits so a round trip is exact.
"""

from __future__ import annotations

import io
import os

from .errors import EdgeListError, ShiftLabError
from .graph import Graph

__all__ = ["parse_edge_list", "read_edge_list", "format_edge_list", "write_edge_list"]


def parse_edge_list(text: str) -> Graph:
    n = None
    edges = []
    seen = {}
    for lineno, raw in enumerate(io.StringIO(text), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if n is None:
            if len(fields) != 2 or fields[0] != "n":
                raise EdgeListError("expected header 'n <vertex-count>'", lineno)
            try:
                n = int(fields[1])
            except ValueError:
                raise EdgeListError(f"bad vertex count {fields[1]!r}", lineno) from None
            if n < 1:
                raise EdgeListError("vertex count must be positive", lineno)
            continue
        if len(fields) not in (2, 3):
            raise EdgeListError(f"expected 'u v w', got {line!r}", lineno)
        try:
            u, v = int(fields[0]), int(fields[1])
            w = float(fields[2]) if len(fields) == 3 else 1.0
        except ValueError:
            raise EdgeListError(f"cannot parse {line!r}", lineno) from None
        if not (0 <= u < n and 0 <= v < n):
            raise EdgeListError(f"endpoint outside 0..{n - 1}", lineno)
        if u == v:
            raise EdgeListError(f"self-loop at vertex {u}", lineno)
        if w == 0.0 or w != w or w in (float("inf"), float("-inf")):
            raise EdgeListError(f"weight must be finite and nonzero, got {fields[2]}", lineno)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise EdgeListError(
                f"duplicate edge {key[0]}-{key[1]} (first on line {seen[key]})", lineno
            )
        seen[key] = lineno
        edges.append((u, v, w))
    if n is None:
        raise EdgeListError("missing header 'n <vertex-count>'")
    try:
        return Graph(n, edges)
    except ShiftLabError as exc:
        raise EdgeListError(str(exc)) from exc


def read_edge_list(path: str | os.PathLike) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return parse_edge_list(fh.read())


def format_edge_list(g: Graph) -> str:
    lines = [f"n {g.n}"]
    lines.extend(f"{u} {v} {w:.17g}" for u, v, w in g.edges)
    return "\n".join(lines) + "\n"


def write_edge_list(g: Graph, path: str | os.PathLike) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_edge_list(g))
