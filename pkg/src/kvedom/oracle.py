"""Exact optima for small instances via cardinality-increasing search.

All three exact solvers reduce to the same question: find a minimum vertex
set D such that |D intersect cover_i| >= demand_i for a list of cover sets.
For k-ve domination the covers are the per-edge sets N[u] union N[v]; for
k-tuple domination they are the closed neighbourhoods.  The search iterates
target cardinalities 0, 1, 2, ... and runs a depth-first include/exclude
search with unit propagation, so the first hit is certified optimal.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

from .errors import BudgetExceededError, InputError
from .graph import Graph, closed_neighborhood, edge_cover_set

#: Default ceiling on examined search nodes.  Generous enough for every
#: desk-scale instance in the test suite; override per call or with the
#: KVEDOM_BUDGET environment variable at the CLI.
DEFAULT_BUDGET = 5_000_000


@dataclass
class OracleResult:
    """Outcome of an exact search.

    ``optimum`` / ``witness`` are None exactly when no solution exists.
    ``explored`` counts examined search nodes (diagnostics only).
    """

    optimum: int | None
    witness: list[int] | None
    explored: int

    @property
    def feasible(self) -> bool:
        return self.optimum is not None


def default_budget() -> int:
    raw = os.environ.get("KVEDOM_BUDGET")
    if raw:
        try:
            return int(raw)
        except ValueError as exc:
            raise InputError(f"KVEDOM_BUDGET must be an integer, got {raw!r}") from exc
    return DEFAULT_BUDGET


class _MulticoverSearch:
    """Depth-first search for a set of <= limit vertices meeting every
    cover demand.  State is undone via a trail so one instance serves all
    target cardinalities."""

    __slots__ = (
        "n", "covers", "demands", "cons_of", "budget",
        "res", "und", "inc", "exc", "chosen", "trail", "explored",
    )

    def __init__(self, n, covers, demands, budget):
        self.n = n
        self.covers = covers
        self.demands = demands
        self.budget = budget
        cons_of = [[] for _ in range(n)]
        for i, mask in enumerate(covers):
            m = mask
            while m:
                low = m & -m
                cons_of[low.bit_length() - 1].append(i)
                m ^= low
        self.cons_of = cons_of
        self.res = list(demands)
        self.und = [mask.bit_count() for mask in covers]
        self.inc = 0
        self.exc = 0
        self.chosen = 0
        self.trail = []
        self.explored = 0

    # -- state updates ---------------------------------------------------

    def _include(self, v):
        self.inc |= 1 << v
        self.chosen += 1
        self.trail.append((True, v))
        for i in self.cons_of[v]:
            self.res[i] -= 1
            self.und[i] -= 1

    def _exclude(self, v):
        self.exc |= 1 << v
        self.trail.append((False, v))
        for i in self.cons_of[v]:
            self.und[i] -= 1

    def _rewind(self, mark):
        while len(self.trail) > mark:
            was_include, v = self.trail.pop()
            if was_include:
                self.inc &= ~(1 << v)
                self.chosen -= 1
                for i in self.cons_of[v]:
                    self.res[i] += 1
                    self.und[i] += 1
            else:
                self.exc &= ~(1 << v)
                for i in self.cons_of[v]:
                    self.und[i] += 1

    def _decide(self, v, include):
        """Apply a decision plus unit propagation.  False means the branch
        is dead (some demand can no longer be met)."""
        stack = [v]
        if include:
            self._include(v)
        else:
            self._exclude(v)
        res = self.res
        und = self.und
        while stack:
            x = stack.pop()
            for i in self.cons_of[x]:
                r = res[i]
                if r <= 0:
                    continue
                u = und[i]
                if r > u:
                    return False
                if r == u:
                    # every still-undecided cover vertex is forced in
                    free = self.covers[i] & ~self.inc & ~self.exc
                    while free:
                        low = free & -free
                        y = low.bit_length() - 1
                        self._include(y)
                        stack.append(y)
                        free ^= low
        return True

    # -- search ----------------------------------------------------------

    def _lower_bound(self):
        """Greedy packing of demand over pairwise-disjoint undecided cover
        parts; each further vertex can serve at most one packed cover."""
        lb = 0
        used = 0
        undecided = ~(self.inc | self.exc)
        for i, r in enumerate(self.res):
            if r > 0:
                free = self.covers[i] & undecided
                if not free & used:
                    lb += r
                    used |= free
        return lb

    def _dfs(self, limit):
        self.explored += 1
        if self.explored > self.budget:
            raise BudgetExceededError(
                f"search exceeded its budget of {self.budget} nodes"
            )
        if self.chosen > limit:
            return None
        max_res = 0
        pick = -1
        pick_slack = self.n + 1
        for i, r in enumerate(self.res):
            if r > 0:
                if r > max_res:
                    max_res = r
                slack = self.und[i] - r
                if slack < pick_slack:
                    pick_slack = slack
                    pick = i
        if pick < 0:
            return self.inc
        lb = self._lower_bound()
        if lb < max_res:
            lb = max_res
        if self.chosen + lb > limit:
            return None
        free = self.covers[pick] & ~self.inc & ~self.exc
        v = (free & -free).bit_length() - 1
        for include in (True, False):
            mark = len(self.trail)
            if self._decide(v, include):
                found = self._dfs(limit)
                if found is not None:
                    return found
            self._rewind(mark)
        return None


def minimum_multicover(n: int, covers, demands, budget: int | None = None) -> OracleResult:
    """Minimum vertex set meeting every (cover mask, demand) constraint.

    Covers are vertex bitmasks.  Infeasible exactly when some demand exceeds
    its cover size, which the search discovers on its own.
    """
    budget = default_budget() if budget is None else budget
    covers = list(covers)
    demands = list(demands)
    search = _MulticoverSearch(n, covers, demands, budget)
    for limit in range(0, n + 1):
        found = search._dfs(limit)
        if found is not None:
            witness = []
            m = found
            while m:
                low = m & -m
                witness.append(low.bit_length() - 1)
                m ^= low
            return OracleResult(len(witness), witness, search.explored)
    return OracleResult(None, None, search.explored)


def _cover_masks_for_edges(g: Graph):
    masks = []
    for e in g.edges:
        mask = 0
        for x in edge_cover_set(g, e):
            mask |= 1 << x
        masks.append(mask)
    return masks


def exact_kve(g: Graph, k: int, budget: int | None = None) -> OracleResult:
    """Minimum k-vertex-edge dominating set by exhaustive certified search."""
    if k < 1:
        raise InputError(f"k must be at least 1, got {k}")
    return minimum_multicover(g.n, _cover_masks_for_edges(g), [k] * g.m, budget)


def exact_ve(g: Graph, budget: int | None = None) -> OracleResult:
    """Minimum vertex-edge dominating set: the k=1 special case."""
    return exact_kve(g, 1, budget)


def exact_ktuple(g: Graph, k: int, budget: int | None = None) -> OracleResult:
    """Minimum set D with |N[v] intersect D| >= k for every vertex v."""
    if k < 1:
        raise InputError(f"k must be at least 1, got {k}")
    masks = []
    for v in range(g.n):
        mask = 0
        for x in closed_neighborhood(g, v):
            mask |= 1 << x
        masks.append(mask)
    return minimum_multicover(g.n, masks, [k] * g.n, budget)
