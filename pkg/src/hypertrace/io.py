"""Text formats for graphs and hypergraphs.

Graphs::

    # comment lines start with '#'
    p graph <n> <m> [base]
    <u> <v>            (m edge lines)

Hypergraphs::

    p hgraph <n> <m> [base]
    <v1> <v2> ...      (m edge lines; blank lines ignored)

The optional ``base`` header token is 0 (default) or 1 and declares the
indexing of the vertex ids in the file; everything is 0-based internally.
"""

from __future__ import annotations

import warnings
from pathlib import Path

from .errors import FormatError
from .graphs import Graph
from .hypergraph import Hypergraph


def _header(line: str, expected: str, lineno: int) -> tuple[int, int, int]:
    parts = line.split()
    if len(parts) not in (4, 5) or parts[0] != "p" or parts[1] != expected:
        raise FormatError(f"expected header 'p {expected} <n> <m> [base]'", lineno)
    try:
        n, m = int(parts[2]), int(parts[3])
        base = int(parts[4]) if len(parts) == 5 else 0
    except ValueError:
        raise FormatError("header fields must be integers", lineno) from None
    if n < 0 or m < 0:
        raise FormatError("counts must be non-negative", lineno)
    if base not in (0, 1):
        raise FormatError("base must be 0 or 1", lineno)
    return n, m, base


def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def parse_graph_text(text: str) -> Graph:
    lines = list(_content_lines(text))
    if not lines:
        raise FormatError("empty input")
    lineno, header = lines[0]
    n, m, base = _header(header, "graph", lineno)
    if len(lines) - 1 != m:
        raise FormatError(f"expected {m} edge lines, found {len(lines) - 1}")
    edges = []
    seen: set[tuple[int, int]] = set()
    for lineno, line in lines[1:]:
        parts = line.split()
        if len(parts) != 2:
            raise FormatError("edge lines must hold exactly two vertex ids", lineno)
        try:
            u, v = (int(p) - base for p in parts)
        except ValueError:
            raise FormatError("vertex ids must be integers", lineno) from None
        if u == v:
            raise FormatError(f"self-loop at vertex {u + base}", lineno)
        if not (0 <= u < n and 0 <= v < n):
            raise FormatError("vertex id out of range", lineno)
        key = (min(u, v), max(u, v))
        if key in seen:
            warnings.warn(f"line {lineno}: duplicate edge {key}", stacklevel=2)
        seen.add(key)
        edges.append((u, v))
    return Graph.from_edges(n, edges)


def parse_graph(path) -> Graph:
    return parse_graph_text(Path(path).read_text())


def serialize_graph(G: Graph, base: int = 0) -> str:
    lines = [f"p graph {G.n} {G.edge_count}" + (f" {base}" if base else "")]
    for u, v in G.edges():
        lines.append(f"{u + base} {v + base}")
    return "\n".join(lines) + "\n"


def parse_hypergraph_text(text: str, allow_multi: bool = False) -> Hypergraph:
    lines = list(_content_lines(text))
    if not lines:
        raise FormatError("empty input")
    lineno, header = lines[0]
    n, m, base = _header(header, "hgraph", lineno)
    if len(lines) - 1 != m:
        raise FormatError(f"expected {m} edge lines, found {len(lines) - 1}")
    edges: list[frozenset[int]] = []
    seen: set[frozenset[int]] = set()
    for lineno, line in lines[1:]:
        try:
            members = [int(p) - base for p in line.split()]
        except ValueError:
            raise FormatError("vertex ids must be integers", lineno) from None
        for v in members:
            if not (0 <= v < n):
                raise FormatError(f"vertex id {v + base} out of range", lineno)
        e = frozenset(members)
        if e in seen and not allow_multi:
            warnings.warn(f"line {lineno}: duplicate edge collapsed", stacklevel=2)
            continue
        seen.add(e)
        edges.append(e)
    return Hypergraph(frozenset(range(n)), tuple(edges), allow_multi=allow_multi)


def parse_hypergraph(path, allow_multi: bool = False) -> Hypergraph:
    return parse_hypergraph_text(Path(path).read_text(), allow_multi=allow_multi)


def serialize_hypergraph(H: Hypergraph, base: int = 0) -> str:
    if H.vertices and H.vertex_list[-1] != H.n - 1:
        raise ValueError("only hypergraphs on a dense vertex range serialize")
    for e in H.edges:
        if not e:
            raise ValueError("the text format cannot carry empty edges")
    lines = [f"p hgraph {H.n} {H.m}" + (f" {base}" if base else "")]
    for e in H.edges:
        lines.append(" ".join(str(v + base) for v in sorted(e)))
    return "\n".join(lines) + "\n"


def sniff_kind(text: str) -> str:
    """Return 'graph' or 'hgraph' from the header of an instance file."""
    for _, line in _content_lines(text):
        parts = line.split()
        if len(parts) >= 2 and parts[0] == "p" and parts[1] in ("graph", "hgraph"):
            return parts[1]
        break
    raise FormatError("missing 'p graph' or 'p hgraph' header")
