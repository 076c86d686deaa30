"""Shattering tests and exact VC dimension with degeneracy pruning.

A subset S is shattered when every one of its 2^|S| subsets, the empty set
included, occurs as the trace of some edge on S.  The search for the
largest shattered set only needs to look at sizes up to
floor(log2(classic degeneracy)) + 1, which keeps exact computation
polynomial whenever the degeneracy is bounded.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .degeneracy import peel_degeneracy
from .errors import BudgetExceededError
from .graphs import Graph, neighborhood_hypergraph
from .hypergraph import Hypergraph

SHATTER_SIZE_CAP = 30
NODE_BUDGET_DEFAULT = 2_000_000


@dataclass(frozen=True)
class VcResult:
    """Exact VC dimension with its witness and search-effort counters."""

    dimension: int
    witness: tuple[int, ...]
    upper_bound_used: int
    nodes_enumerated: int


def is_shattered(H: Hypergraph, subset) -> bool:
    """True iff every subset of ``subset`` occurs as a trace.

    The empty subset must be realized by an actual edge disjoint from
    ``subset``; it is not granted vacuously.
    """
    s = H.normalize_subset(subset)
    if len(s) > SHATTER_SIZE_CAP:
        raise BudgetExceededError(f"shattering test capped at {SHATTER_SIZE_CAP} vertices")
    pos = H.vertex_pos
    smask = 0
    for v in s:
        smask |= 1 << pos[v]
    traces = {em & smask for em in H.edge_masks}
    # All traces are submasks of S, so S is shattered iff all 2^|S| appear.
    return len(traces) == 1 << len(s)


def vc_upper_bound(H: Hypergraph, classic: int | None = None) -> int:
    """Cap floor(log2(classic degeneracy)) + 1 on the VC dimension.

    Returns 0 for an edgeless hypergraph (degeneracy 0) by convention.
    """
    if classic is None:
        classic = peel_degeneracy(H).value
    return classic.bit_length()


def _mask_traces(H: Hypergraph, smask: int) -> set[int]:
    return {em & smask for em in H.edge_masks}


def vc_exact(H: Hypergraph, node_budget: int = NODE_BUDGET_DEFAULT) -> VcResult:
    """Exact VC dimension by size-ascending search under the degeneracy cap.

    Subset sizes are tried in ascending order; once no set of a size
    shatters, no larger set can (subsets of shattered sets are shattered),
    so the search exits early.  Candidates within one size run in
    lexicographic order, making the reported witness deterministic.
    """
    cap = vc_upper_bound(H)
    verts = H.vertex_list
    masks = H.edge_masks
    pos = H.vertex_pos
    has_edges = len(masks) > 0
    dimension = 0
    witness: tuple[int, ...] = ()
    nodes = 0
    for size in range(1, min(cap, H.n) + 1):
        found = None
        target = 1 << size
        for combo in combinations(verts, size):
            nodes += 1
            if nodes > node_budget:
                raise BudgetExceededError("shattering-test budget exceeded", budget=node_budget)
            smask = 0
            for v in combo:
                smask |= 1 << pos[v]
            if len(_mask_traces(H, smask)) == target:
                found = combo
                break
        if found is None:
            break
        dimension, witness = size, found
    if not has_edges:
        dimension, witness = 0, ()
    return VcResult(dimension, witness, cap, nodes)


def vc_neighborhood_exact(G: Graph, node_budget: int = NODE_BUDGET_DEFAULT) -> VcResult:
    """Exact VC dimension of a graph's closed-neighborhood hypergraph.

    Any shattered set of size >= 1 is itself a trace, hence contained in
    one closed neighborhood, so only subsets of single neighborhoods need
    testing.  Matches ``vc_exact`` on the same hypergraph.
    """
    H = neighborhood_hypergraph(G, closed=True)
    cap = vc_upper_bound(H)
    masks = H.edge_masks
    pos = H.vertex_pos
    dimension = 0
    witness: tuple[int, ...] = ()
    nodes = 0
    neighborhoods = [tuple(sorted(e)) for e in H.edges]
    for size in range(1, min(cap, H.n) + 1):
        found = None
        target = 1 << size
        candidates: set[tuple[int, ...]] = set()
        for nb in neighborhoods:
            if len(nb) >= size:
                candidates.update(combinations(nb, size))
        for combo in sorted(candidates):
            nodes += 1
            if nodes > node_budget:
                raise BudgetExceededError("shattering-test budget exceeded", budget=node_budget)
            smask = 0
            for v in combo:
                smask |= 1 << pos[v]
            if len(_mask_traces(H, smask)) == target:
                found = combo
                break
        if found is None:
            break
        dimension, witness = size, found
    return VcResult(dimension, witness, cap, nodes)
