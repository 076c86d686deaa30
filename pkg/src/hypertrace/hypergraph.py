"""Canonical hypergraph values and the trace/restriction operations.

A hypergraph is a finite vertex set together with an ordered family of
edges, each edge a subset of the vertices.  Values are immutable; every
operation returns a new value, so instances are safe to share between
threads.
"""

from __future__ import annotations

import warnings
from collections.abc import Iterable
from dataclasses import dataclass
from functools import cached_property


@dataclass(frozen=True)
class Hypergraph:
    """Immutable hypergraph on an explicit vertex set.

    Freshly built hypergraphs use the dense vertex range [0, n); sub-level
    operations (restriction, pseudo induced subhypergraphs) keep the
    original vertex ids, so the vertex set is stored explicitly.
    """

    vertices: frozenset[int]
    edges: tuple[frozenset[int], ...]
    allow_multi: bool = False

    def __post_init__(self):
        for e in self.edges:
            if not e <= self.vertices:
                bad = sorted(e - self.vertices)
                raise ValueError(f"edge vertex {bad[0]} outside the vertex set")

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def has_duplicate_edges(self) -> bool:
        return len(set(self.edges)) < len(self.edges)

    @property
    def is_simple(self) -> bool:
        return not self.has_duplicate_edges

    @cached_property
    def distinct_edges(self) -> tuple[frozenset[int], ...]:
        """Edges with duplicates collapsed, first occurrence order, empties kept."""
        seen: set[frozenset[int]] = set()
        out = []
        for e in self.edges:
            if e not in seen:
                seen.add(e)
                out.append(e)
        return tuple(out)

    @cached_property
    def vertex_list(self) -> tuple[int, ...]:
        return tuple(sorted(self.vertices))

    @cached_property
    def vertex_pos(self) -> dict[int, int]:
        return {v: i for i, v in enumerate(self.vertex_list)}

    @cached_property
    def edge_masks(self) -> tuple[int, ...]:
        """Edges as bit vectors over positions in ``vertex_list``.

        Only intended for desk-scale enumeration; large instances should
        stay on the incidence-list code paths.
        """
        pos = self.vertex_pos
        masks = []
        for e in self.edges:
            m = 0
            for v in e:
                m |= 1 << pos[v]
            masks.append(m)
        return tuple(masks)

    def normalize_subset(self, subset: Iterable[int]) -> frozenset[int]:
        s = frozenset(subset)
        if not s <= self.vertices:
            bad = sorted(s - self.vertices)
            raise ValueError(f"vertex {bad[0]} not in the hypergraph")
        return s

    def __repr__(self) -> str:
        return f"Hypergraph(n={self.n}, m={self.m}, multi={self.allow_multi})"


@dataclass(frozen=True)
class TraceFamily:
    """Distinct traces of a hypergraph's edges on a base subset."""

    base: frozenset[int]
    traces: tuple[frozenset[int], ...]
    count: int
    includes_empty: bool = False


@dataclass(frozen=True, eq=False)
class DegreeProfile:
    """Per-vertex edge membership counts with min/max aggregates."""

    degrees: dict[int, int]
    min_degree: int
    max_degree: int


def build_hypergraph(n: int, edges: Iterable[Iterable[int]], allow_multi: bool = False) -> Hypergraph:
    """Validate and build a hypergraph on the dense vertex range [0, n).

    Unless ``allow_multi`` is set, duplicate edges are collapsed and the
    collapse is reported through a ``UserWarning``.
    """
    if n < 0:
        raise ValueError("vertex count must be non-negative")
    vertices = frozenset(range(n))
    sets = []
    for e in edges:
        fe = frozenset(e)
        for v in fe:
            if not (0 <= v < n):
                raise ValueError(f"vertex {v} out of range [0, {n})")
        sets.append(fe)
    if not allow_multi:
        seen: set[frozenset[int]] = set()
        deduped = []
        for e in sets:
            if e not in seen:
                seen.add(e)
                deduped.append(e)
        collapsed = len(sets) - len(deduped)
        if collapsed:
            warnings.warn(f"collapsed {collapsed} duplicate edge(s)", stacklevel=2)
        sets = deduped
    return Hypergraph(vertices, tuple(sets), allow_multi)


def restriction(H: Hypergraph, subset: Iterable[int]) -> Hypergraph:
    """Hypergraph on ``subset`` whose edges are the distinct nonempty traces.

    The trace of an edge e on S is e & S.  Empty traces are dropped and
    duplicates collapse regardless of the multi-edge flag.
    """
    s = H.normalize_subset(subset)
    seen: set[frozenset[int]] = set()
    traces = []
    for e in H.edges:
        t = e & s
        if t and t not in seen:
            seen.add(t)
            traces.append(t)
    return Hypergraph(s, tuple(traces), allow_multi=False)


def pseudo_induced(H: Hypergraph, subset: Iterable[int]) -> Hypergraph:
    """Hypergraph on ``subset`` keeping exactly the edges fully inside it."""
    s = H.normalize_subset(subset)
    kept = tuple(e for e in H.edges if e <= s)
    return Hypergraph(s, kept, allow_multi=H.allow_multi)


def trace_family(H: Hypergraph, subset: Iterable[int], include_empty: bool = False) -> TraceFamily:
    """Distinct traces of all edges on ``subset``.

    The count excludes the empty trace unless ``include_empty`` is set.
    """
    s = H.normalize_subset(subset)
    seen: set[frozenset[int]] = set()
    traces = []
    for e in H.edges:
        t = e & s
        if not t and not include_empty:
            continue
        if t not in seen:
            seen.add(t)
            traces.append(t)
    return TraceFamily(s, tuple(traces), len(traces), include_empty)


def degree_profile(H: Hypergraph) -> DegreeProfile:
    """Exact edge-membership counts; duplicate edges count with multiplicity."""
    degrees = {v: 0 for v in H.vertices}
    for e in H.edges:
        for v in e:
            degrees[v] += 1
    if degrees:
        return DegreeProfile(degrees, min(degrees.values()), max(degrees.values()))
    return DegreeProfile({}, 0, 0)
