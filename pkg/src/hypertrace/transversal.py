"""Distinguishing transversals: exact search and certified lower bounds.

A distinguishing transversal is a vertex set on which every edge leaves a
nonempty trace and no two edges leave the same trace.  Its minimum size is
bounded below by (|E| - T_j) / reduced_degeneracy + j for any j not
exceeding that minimum, where T_j is the trace function at size j (or its
2^j - 1 relaxation).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import ceil, comb

from .degeneracy import DegeneracyTriple
from .errors import BudgetExceededError, MultiEdgeError
from .hypergraph import Hypergraph
from .trace import CHAIN_EXACT_WORK_LIMIT, SUBSET_BUDGET_DEFAULT, trace_function_exact


@dataclass(frozen=True)
class BoundEntry:
    """One certified lower-bound evaluation, kept as an exact rational."""

    name: str
    j: int
    value: Fraction
    form: str
    delta_estimate_used: int
    flags: tuple[str, ...] = ()

    @property
    def ceiled(self) -> int:
        return ceil(self.value)


@dataclass(frozen=True)
class DtResult:
    """Minimum distinguishing transversal with any bounds computed for it."""

    value: int
    witness: tuple[int, ...]
    lower_bounds: tuple[BoundEntry, ...] = ()

    @property
    def best_lower_bound(self) -> int:
        return max((b.ceiled for b in self.lower_bounds), default=0)


def _require_simple(H: Hypergraph) -> None:
    if H.has_duplicate_edges:
        raise MultiEdgeError("duplicate edges can never be distinguished; quantity undefined")


def is_distinguishing_transversal(H: Hypergraph, subset) -> bool:
    """True iff all edge traces on ``subset`` are nonempty and pairwise distinct."""
    _require_simple(H)
    s = H.normalize_subset(subset)
    pos = H.vertex_pos
    smask = 0
    for v in s:
        smask |= 1 << pos[v]
    seen: set[int] = set()
    for em in H.edge_masks:
        t = em & smask
        if t == 0 or t in seen:
            return False
        seen.add(t)
    return True


def dt_exact(
    H: Hypergraph,
    degeneracy: DegeneracyTriple | None = None,
    j_max: int = 8,
    subset_budget: int = SUBSET_BUDGET_DEFAULT,
) -> DtResult:
    """Minimum-size distinguishing transversal by size-ascending search.

    The whole vertex set always works for a simple hypergraph without empty
    edges, so the search terminates.  Sizes start at the information floor
    ceil(log2(|E| + 1)): s vertices can host at most 2^s - 1 distinct
    nonempty traces.  When a degeneracy triple is supplied the certified
    lower bounds are attached to the result.
    """
    _require_simple(H)
    if any(not e for e in H.edges):
        raise ValueError("an empty edge admits no transversal")
    bounds: tuple[BoundEntry, ...] = ()
    if degeneracy is not None:
        bounds = tuple(dt_lower_bounds(H, degeneracy, j_max=j_max))
    if H.m == 0:
        return DtResult(0, (), bounds)
    verts = H.vertex_list
    start = next(s for s in range(H.n + 1) if (1 << s) - 1 >= H.m)
    examined = 0
    for size in range(start, H.n + 1):
        for combo in combinations(verts, size):
            examined += 1
            if examined > subset_budget:
                raise BudgetExceededError("transversal search budget exceeded", budget=subset_budget)
            if is_distinguishing_transversal(H, combo):
                return DtResult(size, combo, bounds)
    raise AssertionError("the full vertex set must be a distinguishing transversal")


def dt_lower_bounds(
    H: Hypergraph,
    degeneracy: DegeneracyTriple,
    j_max: int = 8,
) -> list[BoundEntry]:
    """Certified lower bounds on the distinguishing transversal number.

    The parameter j must not exceed the (unknown) answer, so values of j
    are admitted incrementally: j = 0 is always sound, and each further j
    is used only once the bounds already certified reach it.  Using an
    upper estimate of the reduced degeneracy only enlarges the denominator,
    so substituting the classic degeneracy stays sound and is flagged.
    """
    _require_simple(H)
    if any(not e for e in H.edges):
        raise ValueError("an empty edge admits no transversal")
    m = H.m
    if m == 0:
        return [BoundEntry("dt", 0, Fraction(0), "exact-T", 0)]
    delta = degeneracy.reduced_upper
    flags = () if degeneracy.reduced_exact else ("safe-weakened",)
    entries: list[BoundEntry] = []
    certified = 0
    j = 0
    while j <= j_max and j <= certified:
        forms: list[tuple[Fraction, str]] = [
            (Fraction(m - ((1 << j) - 1), delta) + j, "power-of-two"),
        ]
        if comb(H.n, j) * m <= CHAIN_EXACT_WORK_LIMIT:
            t_j, _ = trace_function_exact(H, j, subset_budget=CHAIN_EXACT_WORK_LIMIT)
            forms.insert(0, (Fraction(m - t_j, delta) + j, "exact-T"))
        for value, form in forms:
            entries.append(BoundEntry("dt", j, value, form, delta, flags))
            certified = max(certified, ceil(value))
        j += 1
    return entries
