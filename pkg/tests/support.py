"""Shared test tooling: exhaustive enumeration of small trees and graphs up
to isomorphism, plus independent brute-force oracles used to cross-check
the package's solvers."""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, permutations

import numpy as np

from kvedom import Graph, connected_components, verify_kve

FREE_TREE_COUNTS = {1: 1, 2: 1, 3: 1, 4: 2, 5: 3, 6: 6, 7: 11, 8: 23, 9: 47, 10: 106}


def _rooted_level_sequences(n):
    """All rooted trees on n vertices as level sequences (root level 1),
    generated by the classic successor rule in decreasing lex order."""
    if n == 1:
        yield [1]
        return
    levels = list(range(1, n + 1))
    while True:
        yield levels[:]
        p = next((i for i in range(n - 1, -1, -1) if levels[i] > 2), None)
        if p is None:
            return
        q = next(i for i in range(p - 1, -1, -1) if levels[i] == levels[p] - 1)
        for i in range(p, n):
            levels[i] = levels[i - (p - q)]


def _levels_to_edges(levels):
    last_at = {}
    edges = []
    for v, lev in enumerate(levels):
        if v:
            edges.append((last_at[lev - 1], v))
        last_at[lev] = v
    return edges


def _ahu_certificate(n, adj, root):
    def enc(v, parent):
        parts = sorted(enc(u, v) for u in adj[v] if u != parent)
        return "(" + "".join(parts) + ")"

    return enc(root, -1)


def _tree_centers(n, adj):
    if n == 1:
        return [0]
    degree = [len(a) for a in adj]
    layer = [v for v in range(n) if degree[v] == 1]
    remaining = n
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for v in layer:
            degree[v] = 0
            for u in adj[v]:
                if degree[u] > 1:
                    degree[u] -= 1
                    if degree[u] == 1:
                        nxt.append(u)
        layer = nxt
    return sorted(layer)


@lru_cache(maxsize=None)
def free_trees(n: int) -> tuple[Graph, ...]:
    """One representative per isomorphism class of trees on n vertices."""
    seen = {}
    for levels in _rooted_level_sequences(n):
        edges = _levels_to_edges(levels)
        adj = [[] for _ in range(n)]
        for u, v in edges:
            adj[u].append(v)
            adj[v].append(u)
        cert = min(_ahu_certificate(n, adj, c) for c in _tree_centers(n, adj))
        if cert not in seen:
            seen[cert] = Graph(n, edges)
    return tuple(seen.values())


@lru_cache(maxsize=None)
def nonisomorphic_graphs(n: int) -> tuple[Graph, ...]:
    """One representative per isomorphism class of all graphs on n vertices
    (n <= 6), via the minimum edge-mask over all vertex permutations."""
    if n == 0:
        return (Graph(0, []),)
    pairs = list(combinations(range(n), 2))
    nedges = len(pairs)
    pair_idx = {p: i for i, p in enumerate(pairs)}
    masks = np.arange(1 << nedges, dtype=np.int64)
    bits = ((masks[:, None] >> np.arange(nedges)) & 1).astype(np.int64)
    pow2 = (np.int64(1) << np.arange(nedges, dtype=np.int64))
    canon = masks.copy()
    for perm in permutations(range(n)):
        col = np.empty(nedges, dtype=np.int64)
        for (u, v), i in pair_idx.items():
            a, b = perm[u], perm[v]
            col[(pair_idx[(a, b) if a < b else (b, a)])] = i
        np.minimum(canon, bits[:, col] @ pow2, out=canon)
    reps = np.unique(canon)
    out = []
    for mask in reps.tolist():
        edges = [pairs[i] for i in range(nedges) if mask >> i & 1]
        out.append(Graph(n, edges))
    return tuple(out)


@lru_cache(maxsize=None)
def connected_graphs(n: int) -> tuple[Graph, ...]:
    return tuple(
        g for g in nonisomorphic_graphs(n) if len(connected_components(g)) == 1
    )


def brute_force_kve(g: Graph, k: int):
    """Independent exact optimum: plain subset enumeration through the
    verifier.  Returns (optimum, witness) or None."""
    for size in range(g.n + 1):
        for combo in combinations(range(g.n), size):
            if verify_kve(g, list(combo), k):
                return size, list(combo)
    return None


def brute_force_st(g: Graph, forced_marks, demands):
    """Independent optimum for the labeled tree problem: minimum superset of
    the forced vertices meeting every edge demand.  Returns the optimum
    cardinality or None."""
    base = [v for v in range(g.n) if forced_marks[v]]
    rest = [v for v in range(g.n) if not forced_marks[v]]
    covers = []
    for u, v in g.edges:
        cover = set(g.adj[u]) | set(g.adj[v]) | {u, v}
        covers.append((cover, demands[(u, v)]))
    for size in range(len(rest) + 1):
        for combo in combinations(rest, size):
            chosen = set(base) | set(combo)
            if all(len(cover & chosen) >= need for cover, need in covers):
                return len(chosen)
    return None


def brute_force_chordal(g: Graph) -> bool:
    """No vertex subset induces a cycle of length >= 4 (n <= 8 only)."""
    for size in range(4, g.n + 1):
        for combo in combinations(range(g.n), size):
            inside = set(combo)
            degs = [sum(1 for u in g.adj[v] if u in inside) for v in combo]
            if any(d != 2 for d in degs):
                continue
            # all degrees 2: a disjoint union of cycles; connected iff one cycle
            start = combo[0]
            seen = {start}
            stack = [start]
            while stack:
                x = stack.pop()
                for u in g.adj[x]:
                    if u in inside and u not in seen:
                        seen.add(u)
                        stack.append(u)
            if len(seen) == size:
                return False
    return True
