"""Logarithmic-ratio approximation for k-vertex-edge domination.

The graph is rewritten as a set multicover instance: the universe is the
edge set, and each vertex v contributes the family of edges incident to its
closed neighbourhood.  A greedy multicover (pick the set covering the most
still-deficient elements, each set at most once) then maps straight back to
a vertex solution.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass

from .errors import InputError
from .graph import Graph


@dataclass(frozen=True)
class MulticoverInstance:
    """Universe elements 0..universe_size-1, one candidate set per family
    index, and a uniform demand: every element must end up in at least
    ``demand`` chosen families."""

    universe_size: int
    families: tuple[tuple[int, ...], ...]
    demand: int

    def dump(self) -> str:
        """Debug text form, one line per family."""
        return "".join(
            f"{i}: {' '.join(str(e) for e in fam)}\n"
            for i, fam in enumerate(self.families)
        )


def build_cover_instance(g: Graph, k: int) -> MulticoverInstance:
    """Multicover instance whose k-covers are exactly the k-ve dominating
    sets of g: element ids are edge ids (construction order), family v holds
    the edges with an endpoint in N[v]."""
    if k < 1:
        raise InputError(f"k must be at least 1, got {k}")
    incident = [[] for _ in range(g.n)]
    for eid, (a, b) in enumerate(g.edges):
        incident[a].append(eid)
        incident[b].append(eid)
    families = []
    for v in range(g.n):
        fam = set(incident[v])
        for x in g.adj[v]:
            fam.update(incident[x])
        families.append(tuple(sorted(fam)))
    return MulticoverInstance(
        universe_size=g.m, families=tuple(families), demand=k
    )


def greedy_multicover(inst: MulticoverInstance):
    """Greedy k-multicover: repeatedly choose an unchosen set covering the
    most elements with positive residual demand (ties to the lowest index).

    Returns the chosen set indices in selection order, or None when some
    element belongs to fewer than ``demand`` families.
    """
    k = inst.demand
    multiplicity = [0] * inst.universe_size
    for fam in inst.families:
        for e in fam:
            multiplicity[e] += 1
    if any(c < k for c in multiplicity):
        return None

    residual = [k] * inst.universe_size
    outstanding = k * inst.universe_size
    chosen = []
    taken = [False] * len(inst.families)

    def coverage(i):
        return sum(1 for e in inst.families[i] if residual[e] > 0)

    # lazy greedy: scores only ever decrease, so a popped entry whose score
    # is still current is a true maximum
    heap = [(-len(fam), i) for i, fam in enumerate(inst.families)]
    heapq.heapify(heap)
    while outstanding > 0:
        neg, i = heapq.heappop(heap)
        if taken[i]:
            continue
        cov = coverage(i)
        if cov != -neg:
            heapq.heappush(heap, (-cov, i))
            continue
        taken[i] = True
        chosen.append(i)
        for e in inst.families[i]:
            if residual[e] > 0:
                residual[e] -= 1
                outstanding -= 1
    return chosen


def approx_kve(g: Graph, k: int):
    """Greedy k-ve dominating set: sorted vertex list, or None when the
    instance is infeasible (some edge cover set smaller than k)."""
    inst = build_cover_instance(g, k)
    picked = greedy_multicover(inst)
    if picked is None:
        return None
    return sorted(picked)
