"""Core graph types: simple undirected graphs, rooted trees, and the
neighbourhood primitives that the domination solvers are built on."""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass

from .errors import InputError


class Graph:
    """Immutable simple undirected graph on vertex ids 0..n-1.

    Adjacency lists are stored sorted so neighbourhood unions are linear
    merges.  The edge list keeps construction order (normalized to u < v);
    that order fixes edge ids for the multicover reduction and makes file
    round-trips byte-stable.
    """

    __slots__ = ("n", "adj", "edges", "_edge_set")

    def __init__(self, n: int, edges=(), *, validate: bool = True):
        edges = [(int(u), int(v)) for u, v in edges]
        if validate:
            if n < 0:
                raise InputError(f"vertex count must be nonnegative, got {n}")
            seen = set()
            for u, v in edges:
                if not (0 <= u < n and 0 <= v < n):
                    raise InputError(f"edge ({u}, {v}) out of range for n={n}")
                if u == v:
                    raise InputError(f"self-loop at vertex {u}")
                key = (u, v) if u < v else (v, u)
                if key in seen:
                    raise InputError(f"duplicate edge ({u}, {v})")
                seen.add(key)
        norm = [(u, v) if u < v else (v, u) for u, v in edges]
        adj = [[] for _ in range(n)]
        for u, v in norm:
            adj[u].append(v)
            adj[v].append(u)
        for lst in adj:
            lst.sort()
        self.n = n
        self.adj = tuple(tuple(lst) for lst in adj)
        self.edges = tuple(norm)
        self._edge_set = frozenset(norm)

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def max_degree(self) -> int:
        return max((len(a) for a in self.adj), default=0)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self._edge_set

    def check_vertex(self, v: int) -> None:
        if not (0 <= v < self.n):
            raise InputError(f"vertex {v} out of range for n={self.n}")

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self.edges == other.edges
        )

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class RootedTree:
    """A tree together with a root, parent pointers and a processing order.

    ``order`` is the reverse of the BFS visitation order from the root:
    deepest vertices come first and ``order[-1]`` is the root, so depths are
    non-increasing along it.  The root's parent is the sentinel -1.
    """

    graph: Graph
    root: int
    parent: tuple[int, ...]
    order: tuple[int, ...]

    def children_lists(self) -> list[list[int]]:
        """Children of every vertex, each list ascending by id."""
        children = [[] for _ in range(self.graph.n)]
        for v in reversed(self.order):
            p = self.parent[v]
            if p >= 0:
                children[p].append(v)
        return children

    def depths(self) -> list[int]:
        depth = [0] * self.graph.n
        for v in reversed(self.order):
            p = self.parent[v]
            if p >= 0:
                depth[v] = depth[p] + 1
        return depth


def check_vertex_set(g: Graph, members) -> list[int]:
    """Validate a strictly increasing, in-range vertex list and return it."""
    out = [int(v) for v in members]
    for v in out:
        g.check_vertex(v)
    for a, b in zip(out, out[1:]):
        if a >= b:
            raise InputError("vertex set must be strictly increasing")
    return out


def closed_neighborhood(g: Graph, v: int) -> list[int]:
    """Sorted N[v] = N(v) plus v itself."""
    g.check_vertex(v)
    out = []
    placed = False
    for u in g.adj[v]:
        if not placed and u > v:
            out.append(v)
            placed = True
        out.append(u)
    if not placed:
        out.append(v)
    return out


def edge_cover_set(g: Graph, e) -> list[int]:
    """Sorted N[u] union N[v] for an edge (u, v): the vertices whose presence
    in a solution counts toward that edge's demand."""
    u, v = e
    g.check_vertex(u)
    g.check_vertex(v)
    if not g.has_edge(u, v):
        raise InputError(f"({u}, {v}) is not an edge")
    merged = sorted(set(closed_neighborhood(g, u)) | set(closed_neighborhood(g, v)))
    return merged


def verify_kve(g: Graph, d, k: int) -> bool:
    """True iff every edge (u, v) has at least k members of d in N[u] union N[v].

    Edgeless graphs verify vacuously for any d.
    """
    if k < 1:
        raise InputError(f"k must be at least 1, got {k}")
    members = check_vertex_set(g, d)
    return first_violated_edge(g, members, k) is None


def first_violated_edge(g: Graph, d, k: int):
    """First edge (in construction order) whose demand d fails, or None."""
    in_d = bytearray(g.n)
    for v in d:
        in_d[v] = 1
    for u, v in g.edges:
        cover = set(g.adj[u])
        cover.update(g.adj[v])
        cover.add(u)
        cover.add(v)
        hit = sum(in_d[x] for x in cover)
        if hit < k:
            return (u, v)
    return None


def feasible(g: Graph, k: int) -> bool:
    """True iff every edge's cover set has size at least k, i.e. the whole
    vertex set is itself a valid solution."""
    if k < 1:
        raise InputError(f"k must be at least 1, got {k}")
    for u, v in g.edges:
        # |N[u] ∪ N[v]| without materializing the union
        common = len(set(g.adj[u]) & set(g.adj[v]))
        size = (g.degree(u) + 1) + (g.degree(v) + 1) - common - 2
        if size < k:
            return False
    return True


def bfs_rooted(g: Graph, root: int) -> RootedTree:
    """Root a tree at ``root``; the processing order is reverse BFS."""
    g.check_vertex(root)
    if g.m != g.n - 1:
        raise InputError(f"not a tree: n={g.n} but m={g.m}")
    parent = [-1] * g.n
    visit = [root]
    seen = bytearray(g.n)
    seen[root] = 1
    queue = deque([root])
    while queue:
        u = queue.popleft()
        for v in g.adj[u]:
            if not seen[v]:
                seen[v] = 1
                parent[v] = u
                visit.append(v)
                queue.append(v)
    if len(visit) != g.n:
        raise InputError("not a tree: graph is disconnected")
    return RootedTree(graph=g, root=root, parent=tuple(parent), order=tuple(reversed(visit)))


def is_chordal(g: Graph) -> bool:
    """Chordality via maximum-cardinality search plus a perfect-elimination
    ordering check; works on disconnected graphs."""
    n = g.n
    if n == 0:
        return True
    weight = [0] * n
    numbered = bytearray(n)
    pick_order = []
    for _ in range(n):
        best, best_w = -1, -1
        for v in range(n):
            if not numbered[v] and weight[v] > best_w:
                best, best_w = v, weight[v]
        numbered[best] = 1
        pick_order.append(best)
        for u in g.adj[best]:
            if not numbered[u]:
                weight[u] += 1
    elim = pick_order[::-1]
    pos = [0] * n
    for i, v in enumerate(elim):
        pos[v] = i
    pending = [set() for _ in range(n)]
    for v in elim:
        later = [u for u in g.adj[v] if pos[u] > pos[v]]
        missing = pending[v] - set(g.adj[v])
        if missing:
            return False
        if later:
            anchor = min(later, key=lambda u: pos[u])
            pending[anchor].update(u for u in later if u != anchor)
    return True


def connected_components(g: Graph) -> list[list[int]]:
    """Vertex lists of the connected components, each sorted, ordered by
    smallest member."""
    seen = bytearray(g.n)
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = 1
        comp = [s]
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for v in g.adj[u]:
                if not seen[v]:
                    seen[v] = 1
                    comp.append(v)
                    queue.append(v)
        comps.append(sorted(comp))
    return comps


def induced_subgraph(g: Graph, vertices) -> tuple[Graph, list[int]]:
    """Subgraph induced by ``vertices``; returns it together with the list
    mapping new ids back to the originals."""
    old_ids = check_vertex_set(g, vertices)
    new_id = {old: new for new, old in enumerate(old_ids)}
    edges = [
        (new_id[u], new_id[v])
        for u, v in g.edges
        if u in new_id and v in new_id
    ]
    return Graph(len(old_ids), edges, validate=False), old_ids


def tree_center(g: Graph) -> int:
    """A center of a tree: the middle of a longest path, smaller id on ties.

    Used by the CLI to pick a deterministic root before solving.
    """
    if g.m != g.n - 1:
        raise InputError(f"not a tree: n={g.n} but m={g.m}")

    def farthest(src):
        dist = [-1] * g.n
        dist[src] = 0
        par = [-1] * g.n
        queue = deque([src])
        while queue:
            u = queue.popleft()
            for v in g.adj[u]:
                if dist[v] < 0:
                    dist[v] = dist[u] + 1
                    par[v] = u
                    queue.append(v)
        if min(dist) < 0:
            raise InputError("not a tree: graph is disconnected")
        far = max(range(g.n), key=lambda v: (dist[v], -v))
        return far, dist, par

    a, _, _ = farthest(0)
    b, dist, par = farthest(a)
    path = [b]
    while par[path[-1]] >= 0:
        path.append(par[path[-1]])
    diameter = len(path) - 1
    mid = path[diameter // 2], path[(diameter + 1) // 2]
    return min(mid)


def gen_random_tree(n: int, seed: int) -> Graph:
    """Uniform random labeled tree from a seeded Pruefer sequence."""
    if n < 1:
        raise InputError(f"tree needs at least one vertex, got n={n}")
    if n == 1:
        return Graph(1, [])
    if n == 2:
        return Graph(2, [(0, 1)])
    rng = random.Random(seed)
    seq = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    edges = []
    ptr = 0
    while degree[ptr] != 1:
        ptr += 1
    leaf = ptr
    for x in seq:
        edges.append((leaf, x))
        degree[leaf] -= 1
        degree[x] -= 1
        if degree[x] == 1 and x < ptr:
            leaf = x
        else:
            ptr += 1
            while degree[ptr] != 1:
                ptr += 1
            leaf = ptr
    last = [v for v in range(n) if degree[v] == 1]
    edges.append((last[0], last[1]))
    return Graph(n, edges, validate=False)


def gen_random_graph(n: int, p: float, seed: int) -> Graph:
    """Erdos-Renyi style graph: each pair kept with probability p."""
    if n < 1:
        raise InputError(f"graph needs at least one vertex, got n={n}")
    if not 0.0 <= p <= 1.0:
        raise InputError(f"edge probability must be in [0, 1], got {p}")
    rng = random.Random(seed)
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                edges.append((u, v))
    return Graph(n, edges, validate=False)
