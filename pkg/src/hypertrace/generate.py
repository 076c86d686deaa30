"""Deterministic random instances: trees, G(n,p) graphs, and hypergraphs."""

from __future__ import annotations

import heapq
import random
from math import comb

from .graphs import Graph
from .hypergraph import Hypergraph, build_hypergraph


def _rng(seed) -> random.Random:
    return seed if isinstance(seed, random.Random) else random.Random(seed)


def random_tree(n: int, seed=0) -> Graph:
    """Uniform random labelled tree, decoded from a random Prüfer sequence."""
    if n < 1:
        raise ValueError("a tree needs at least one vertex")
    rng = _rng(seed)
    if n == 1:
        return Graph.from_edges(1, [])
    if n == 2:
        return Graph.from_edges(2, [(0, 1)])
    seq = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for v in seq:
        degree[v] += 1
    edges = []
    # Repeatedly join the smallest current leaf to the next code symbol.
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    for v in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, v))
        degree[v] -= 1
        if degree[v] == 1:
            heapq.heappush(leaves, v)
    u = heapq.heappop(leaves)
    w = heapq.heappop(leaves)
    edges.append((u, w))
    return Graph.from_edges(n, edges)


def random_gnp(n: int, p: float, seed=0) -> Graph:
    """Erdos-Renyi graph: each pair is an edge independently with probability p."""
    if n < 0:
        raise ValueError("vertex count must be non-negative")
    if not 0.0 <= p <= 1.0:
        raise ValueError("p must lie in [0, 1]")
    rng = _rng(seed)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Graph.from_edges(n, edges)


def random_hypergraph(
    n: int,
    m: int,
    max_edge_size: int | None = None,
    seed=0,
    allow_multi: bool = False,
) -> Hypergraph:
    """Random hypergraph with m edges drawn independently and uniformly.

    Each edge picks a size uniformly in [1, max_edge_size] and then that
    many distinct vertices.  Without ``allow_multi`` duplicate draws are
    retried, so the request must not exceed the number of distinct
    candidate edges.
    """
    if n < 1 and m > 0:
        raise ValueError("edges need at least one vertex")
    if m < 0:
        raise ValueError("edge count must be non-negative")
    k = n if max_edge_size is None else min(max_edge_size, n)
    if m and k < 1:
        raise ValueError("max edge size must be at least 1")
    if not allow_multi:
        available = sum(comb(n, s) for s in range(1, k + 1))
        if m > available:
            raise ValueError(
                f"only {available} distinct nonempty edges of size <= {k} exist on {n} vertices"
            )
    rng = _rng(seed)
    edges: list[frozenset[int]] = []
    seen: set[frozenset[int]] = set()
    while len(edges) < m:
        size = rng.randint(1, k)
        e = frozenset(rng.sample(range(n), size))
        if allow_multi or e not in seen:
            seen.add(e)
            edges.append(e)
    return build_hypergraph(n, edges, allow_multi=allow_multi)


def generate(kind: str, params: dict, seed=0):
    """Dispatch to the typed generators; `kind` is tree, gnp, or hypergraph."""
    if kind == "tree":
        return random_tree(int(params["n"]), seed)
    if kind == "gnp":
        return random_gnp(int(params["n"]), float(params["p"]), seed)
    if kind == "hypergraph":
        return random_hypergraph(
            int(params["n"]),
            int(params["m"]),
            int(params["max_edge_size"]) if params.get("max_edge_size") is not None else None,
            seed,
            bool(params.get("allow_multi", False)),
        )
    raise ValueError(f"unknown instance kind: {kind}")
