"""Exact locating/identifying domination numbers and their lower bounds.

Three parameters are handled, each the minimum size of a vertex set S:

* LD  -- every vertex is dominated (closed neighborhood meets S) and
  vertices outside S have pairwise distinct open traces N(x) & S;
* ID  -- dominating, and all closed traces N[x] & S are pairwise distinct;
* OLD -- every open neighborhood meets S and all open traces are pairwise
  distinct.

ID is exactly a distinguishing transversal of the closed-neighborhood
hypergraph and OLD of the open one, which is what connects the trace
machinery to these graph parameters.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import ceil, comb

from .degeneracy import DegeneracyTriple, EXACT_LIMIT_DEFAULT, reduced_degeneracy
from .errors import BudgetExceededError, NotATreeError
from .graphs import Graph, find_twins, neighborhood_hypergraph, tree_stats
from .hypergraph import Hypergraph
from .trace import CHAIN_EXACT_WORK_LIMIT, trace_function_exact
from .transversal import BoundEntry

KINDS = ("LD", "ID", "OLD")
GAMMA_SUBSET_BUDGET = 5_000_000


@dataclass(frozen=True)
class DominationReport:
    """Outcome of one exact domination computation."""

    kind: str
    feasible: bool
    exact: int | None
    witness: tuple[int, ...] | None
    bounds: tuple[BoundEntry, ...] = ()
    infeasible_reason: str | None = None
    infeasible_pair: tuple[int, int] | None = None

    @property
    def best_lower_bound(self) -> int:
        return max((b.ceiled for b in self.bounds), default=0)


def _closed_masks(G: Graph) -> list[int]:
    out = []
    for v in range(G.n):
        m = 1 << v
        for u in G.adj[v]:
            m |= 1 << u
        out.append(m)
    return out


def _open_masks(G: Graph) -> list[int]:
    out = []
    for v in range(G.n):
        m = 0
        for u in G.adj[v]:
            m |= 1 << u
        out.append(m)
    return out


def _feasibility(G: Graph, kind: str) -> tuple[bool, str | None, tuple[int, int] | None]:
    if kind == "ID":
        twins = find_twins(G, closed=True)
        if twins:
            return False, "closed twins cannot be told apart", twins[0]
    elif kind == "OLD":
        isolated = [v for v in range(G.n) if not G.adj[v]]
        if isolated:
            return False, "isolated vertex has an empty open neighborhood", (isolated[0], isolated[0])
        twins = find_twins(G, closed=False)
        if twins:
            return False, "open twins cannot be told apart", twins[0]
    return True, None, None


def _satisfies(kind: str, smask: int, closed: list[int], open_: list[int], n: int) -> bool:
    if kind == "LD":
        labels = []
        for x in range(n):
            if smask >> x & 1:
                continue
            t = open_[x] & smask
            if t == 0:
                return False
            labels.append(t)
        return len(set(labels)) == len(labels)
    masks = closed if kind == "ID" else open_
    seen: set[int] = set()
    for x in range(n):
        t = masks[x] & smask
        if t == 0 or t in seen:
            return False
        seen.add(t)
    return True


def _size_floor(kind: str, n: int) -> int:
    # s chosen vertices can produce at most 2^s - 1 distinct nonempty labels.
    for s in range(n + 1):
        need = n - s if kind == "LD" else n
        if (1 << s) - 1 >= need:
            return s
    return n


def gamma_exact(G: Graph, kind: str, subset_budget: int = GAMMA_SUBSET_BUDGET) -> DominationReport:
    """Minimum locating-domination parameter of the requested kind.

    Infeasible inputs (closed twins for ID, open twins or isolated
    vertices for OLD) yield a structured report naming a violating pair
    instead of an exact value.  The search ascends through subset sizes
    from an information-theoretic floor, so the first hit is minimum and
    the lexicographically first witness is reported.
    """
    if kind not in KINDS:
        raise ValueError(f"kind must be one of {KINDS}")
    feasible, reason, pair = _feasibility(G, kind)
    if not feasible:
        return DominationReport(kind, False, None, None, (), reason, pair)
    closed = _closed_masks(G)
    open_ = _open_masks(G)
    examined = 0
    for size in range(_size_floor(kind, G.n), G.n + 1):
        for combo in combinations(range(G.n), size):
            examined += 1
            if examined > subset_budget:
                raise BudgetExceededError("domination search budget exceeded", budget=subset_budget)
            smask = 0
            for v in combo:
                smask |= 1 << v
            if _satisfies(kind, smask, closed, open_, G.n):
                return DominationReport(kind, True, size, combo)
    return DominationReport(
        kind, False, None, None, (), "no subset satisfies the predicate", None
    )


def _exact_or_relaxed_trace(H: Hypergraph, j: int) -> tuple[int, str]:
    m_distinct = len(set(H.edges))
    if comb(H.n, j) * max(m_distinct, 1) <= CHAIN_EXACT_WORK_LIMIT:
        t, _ = trace_function_exact(H, j, subset_budget=CHAIN_EXACT_WORK_LIMIT)
        return t, "exact-T"
    return (1 << j) - 1, "power-of-two"


def _ld_pair_bounds(
    n: int, j: int, closed_data: tuple[int, int, str, bool], open_data: tuple[int, int, str, bool]
) -> list[BoundEntry]:
    """LD bounds pairing each hypergraph's trace value with its own degeneracy.

    Each neighborhood family, restricted to the vertices outside a
    locating-dominating set, leaves that many distinct nonempty traces on
    the set; splitting the count with the peel chain certifies
    (n + delta*j - T_j) / (delta + 1) for either family.  Pairing a
    family's trace value with the other family's degeneracy is not
    certified and is therefore never emitted.
    """
    entries = []
    for name, (delta, t_j, form, exact) in (
        ("ld-closed-pair", closed_data),
        ("ld-open-pair", open_data),
    ):
        flags = () if exact else ("safe-weakened",)
        value = Fraction(n + delta * j - t_j, delta + 1)
        entries.append(BoundEntry(name, j, value, form, delta, flags))
    return entries


@dataclass(frozen=True)
class KindBounds:
    """Lower bounds for one domination kind, with feasibility caveats."""

    kind: str
    feasible: bool
    entries: tuple[BoundEntry, ...]
    caveats: tuple[str, ...] = ()
    infeasible_pair: tuple[int, int] | None = None

    @property
    def best(self) -> int:
        return max((b.ceiled for b in self.entries), default=0)


def domination_lower_bounds(
    G: Graph,
    j_max: int = 8,
    exact_limit: int = EXACT_LIMIT_DEFAULT,
    closed_degeneracy: DegeneracyTriple | None = None,
    open_degeneracy: DegeneracyTriple | None = None,
) -> dict[str, KindBounds]:
    """The neighborhood-hypergraph lower bounds for all three kinds.

    j is bootstrapped per kind exactly as for distinguishing transversals.
    For OLD the formula pairing the open-hypergraph degeneracy with the
    closed hypergraph's trace value is also evaluated; the weaker (safe)
    of the two readings is reported and a flag records any discrepancy.
    """
    n = G.n
    H = neighborhood_hypergraph(G, closed=True)
    Ho = neighborhood_hypergraph(G, closed=False)
    dc = closed_degeneracy or reduced_degeneracy(H, exact_limit)
    do = open_degeneracy or reduced_degeneracy(Ho, exact_limit)
    out: dict[str, KindBounds] = {}

    def ld_entries_at(j: int) -> list[BoundEntry]:
        tc, fc = _exact_or_relaxed_trace(H, j)
        to, fo = _exact_or_relaxed_trace(Ho, j)
        return _ld_pair_bounds(
            n,
            j,
            (dc.reduced_upper, tc, fc, dc.reduced_exact),
            (do.reduced_upper, to, fo, do.reduced_exact),
        )

    closed_twins = find_twins(G, closed=True)
    open_twins = find_twins(G, closed=False)
    for kind in KINDS:
        feasible, reason, pair = _feasibility(G, kind)
        caveats: list[str] = []
        if closed_twins:
            caveats.append("closed twins present")
        if open_twins:
            caveats.append("open twins present")
        entries: list[BoundEntry] = []
        if not feasible:
            out[kind] = KindBounds(kind, False, (), tuple([reason, *caveats]), pair)
            continue
        certified = 0
        j = 0
        while j <= j_max and j <= certified:
            batch = ld_entries_at(j)
            if kind == "ID":
                t_j, form = _exact_or_relaxed_trace(H, j)
                flags = () if dc.reduced_exact else ("safe-weakened",)
                batch.append(
                    BoundEntry(
                        "id-transversal", j, Fraction(n - t_j, dc.reduced_upper) + j, form, dc.reduced_upper, flags
                    )
                )
            elif kind == "OLD":
                t_open, form_o = _exact_or_relaxed_trace(Ho, j)
                t_closed, form_c = _exact_or_relaxed_trace(H, j)
                flags = () if do.reduced_exact else ("safe-weakened",)
                certified_value = Fraction(n - t_open, do.reduced_upper) + j
                literal_value = Fraction(n - t_closed, do.reduced_upper) + j
                if literal_value != certified_value:
                    flags = flags + ("formula-discrepancy",)
                value = min(certified_value, literal_value)
                form = form_o if value == certified_value else form_c
                batch.append(
                    BoundEntry("old-transversal", j, value, form, do.reduced_upper, flags)
                )
            for entry in batch:
                entries.append(entry)
                certified = max(certified, entry.ceiled)
            j += 1
        out[kind] = KindBounds(kind, True, tuple(entries), tuple(caveats))
    return out


@dataclass(frozen=True)
class TreeBounds:
    """The closed-form tree lower bounds, already ceiled."""

    ld: int
    id: int | None
    old: int
    id_hypothesis_holds: bool


def tree_lower_bounds(G: Graph) -> TreeBounds:
    """Leaf-structure lower bounds for trees on at least four vertices.

    The ID bound only applies when every support vertex is adjacent to a
    single leaf; when that hypothesis fails the bound is withheld rather
    than assumed.
    """
    if not G.is_tree:
        raise NotATreeError("tree bounds require a tree")
    if G.n < 4:
        raise ValueError("tree bounds are stated for trees on at least 4 vertices")
    stats = tree_stats(G)
    n, leaf_count, support_count = G.n, stats.leaf_count, stats.support_count
    leaf_set = set(stats.leaves)
    single_leaf = all(
        sum(1 for u in G.adj[s] if u in leaf_set) == 1 for s in stats.supports
    )
    ld = ceil(Fraction(n + 1 + 2 * (leaf_count - support_count), 3))
    id_bound = ceil(Fraction(n + 3, 3)) if single_leaf else None
    old = ceil(Fraction(n + 1, 2))
    return TreeBounds(ld, id_bound, old, single_leaf)


@dataclass(frozen=True)
class CertificateItem:
    name: str
    limit: int
    low: int
    high: int
    exact: bool

    @property
    def passed(self) -> bool:
        return self.high <= self.limit


@dataclass(frozen=True)
class TreeCertificates:
    items: tuple[CertificateItem, ...]

    @property
    def all_passed(self) -> bool:
        return all(item.passed for item in self.items)


def tree_degeneracy_certificates(G: Graph, exact_limit: int = EXACT_LIMIT_DEFAULT) -> TreeCertificates:
    """Check the five degeneracy caps that hold for neighborhood hypergraphs of trees.

    Closed: classic <= 3 and pseudo <= 2.  Open: classic <= 2, reduced <= 2,
    pseudo <= 2.  The reduced value is exact up to ``exact_limit`` vertices
    and otherwise reported as its [pseudo, classic] envelope, whose upper
    end already decides the check.
    """
    if not G.is_tree:
        raise NotATreeError("certificates require a tree")
    if G.n < 2:
        raise ValueError("certificates are stated for trees on at least 2 vertices")
    H = neighborhood_hypergraph(G, closed=True)
    Ho = neighborhood_hypergraph(G, closed=False)
    dc = reduced_degeneracy(H, exact_limit)
    do = reduced_degeneracy(Ho, exact_limit)
    items = (
        CertificateItem("classic-closed", 3, dc.classic, dc.classic, True),
        CertificateItem("classic-open", 2, do.classic, do.classic, True),
        CertificateItem("reduced-open", 2, do.reduced_low, do.reduced_high, do.reduced_exact),
        CertificateItem("pseudo-closed", 2, dc.pseudo, dc.pseudo, True),
        CertificateItem("pseudo-open", 2, do.pseudo, do.pseudo, True),
    )
    return TreeCertificates(items)


def domination_summary(G: Graph, subset_budget: int = GAMMA_SUBSET_BUDGET, j_max: int = 8) -> dict[str, DominationReport]:
    """Exact values and lower bounds for all three kinds in one pass."""
    bounds = domination_lower_bounds(G, j_max=j_max)
    out = {}
    for kind in KINDS:
        report = gamma_exact(G, kind, subset_budget=subset_budget)
        kb = bounds[kind]
        out[kind] = DominationReport(
            kind,
            report.feasible,
            report.exact,
            report.witness,
            kb.entries,
            report.infeasible_reason,
            report.infeasible_pair,
        )
    return out
