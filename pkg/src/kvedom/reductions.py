"""Constructors for the three hardness-reduction gadgets, plus empirical
checkers that validate each reduction's defining equality on instances small
enough for the exact oracle.

Every builder returns a GadgetGraph carrying a total role map (one role
string per vertex) and provenance, so tests and the structural audit can
explain every edge by exactly one construction rule.
"""

from __future__ import annotations

from itertools import combinations
from dataclasses import dataclass

from .errors import InputError
from .graph import Graph
from .oracle import exact_ktuple, exact_kve, exact_ve


@dataclass(frozen=True)
class Ex3CInstance:
    """Exact-3-cover instance: universe {0..3q-1} and a collection of
    3-element subsets, each stored sorted."""

    q: int
    collection: tuple[tuple[int, int, int], ...]

    def __post_init__(self):
        if self.q < 1:
            raise InputError(f"q must be at least 1, got {self.q}")
        size = 3 * self.q
        norm = []
        for triple in self.collection:
            members = sorted(int(x) for x in triple)
            if len(members) != 3 or len(set(members)) != 3:
                raise InputError(f"collection member {triple} is not a 3-element set")
            if members[0] < 0 or members[-1] >= size:
                raise InputError(f"collection member {triple} out of range for 3q={size}")
            norm.append(tuple(members))
        object.__setattr__(self, "collection", tuple(norm))

    @property
    def universe_size(self) -> int:
        return 3 * self.q

    @property
    def m(self) -> int:
        return len(self.collection)


def has_exact_cover(inst: Ex3CInstance) -> bool:
    """Exhaustively decide whether q pairwise-disjoint triples cover the
    universe."""
    size = inst.universe_size
    for combo in combinations(range(inst.m), inst.q):
        seen = set()
        for idx in combo:
            seen.update(inst.collection[idx])
        if len(seen) == size:
            return True
    return False


@dataclass(frozen=True)
class GadgetGraph:
    """A reduction output: the graph, one role string per vertex, and the
    parameters that produced it."""

    graph: Graph
    roles: tuple[str, ...]
    provenance: dict

    def vertices_of(self, kind: str) -> list[int]:
        """All vertex ids whose role starts with the given kind prefix."""
        return [
            v for v, role in enumerate(self.roles)
            if role == kind or role.startswith(kind + ":")
        ]


def build_ex3c_gadget(inst: Ex3CInstance, k: int) -> GadgetGraph:
    """Chordal gadget tying exact-3-cover to k-ve domination.

    Layout (vertex ids in order): element vertices a_i, collection vertices
    b_j (a clique), a clique P of size k-2 joined to every b_j, a pendant
    path u-v with v joined to P, one y_i pendant to each a_i, a clique Q_i
    of size k-1 joined to each y_i, and a pendant path z_i-l_i with z_i
    joined to Q_i.  The exact cover exists iff the gadget has a k-ve
    dominating set of size at most k + q + 3qk.
    """
    if k < 2:
        raise InputError(f"gadget needs k >= 2, got {k}")
    q, m = inst.q, inst.m
    na = 3 * q
    a0 = 0
    b0 = na
    p0 = b0 + m
    v_id = p0 + (k - 2)
    u_id = v_id + 1
    y0 = u_id + 1
    q0 = y0 + na
    z0 = q0 + na * (k - 1)
    l0 = z0 + na
    n = l0 + na

    roles = (
        [f"a:{i}" for i in range(na)]
        + [f"b:{j}" for j in range(m)]
        + [f"p:{t}" for t in range(k - 2)]
        + ["v", "u"]
        + [f"y:{i}" for i in range(na)]
        + [f"q:{i}:{t}" for i in range(na) for t in range(k - 1)]
        + [f"z:{i}" for i in range(na)]
        + [f"l:{i}" for i in range(na)]
    )

    edges = []
    bs = range(b0, b0 + m)
    ps = range(p0, p0 + (k - 2))
    edges.extend((x, y) for x, y in combinations(bs, 2))
    edges.extend((x, y) for x, y in combinations(ps, 2))
    edges.extend((x, p) for x in bs for p in ps)
    for j, triple in enumerate(inst.collection):
        edges.extend((a0 + i, b0 + j) for i in triple)
    edges.append((v_id, u_id))
    edges.extend((v_id, p) for p in ps)
    edges.extend((a0 + i, y0 + i) for i in range(na))
    for i in range(na):
        block = range(q0 + i * (k - 1), q0 + (i + 1) * (k - 1))
        edges.extend((x, y) for x, y in combinations(block, 2))
        edges.extend((y0 + i, x) for x in block)
        edges.append((z0 + i, l0 + i))
        edges.extend((z0 + i, x) for x in block)

    graph = Graph(n, edges, validate=False)
    provenance = {"reduction": "ex3c", "k": k, "q": q, "collection": inst.collection}
    return GadgetGraph(graph=graph, roles=tuple(roles), provenance=provenance)


def check_ex3c_claim(inst: Ex3CInstance, k: int, budget: int | None = None) -> bool:
    """Verify the reduction's biconditional on one instance by computing
    both sides exactly: an exact cover exists iff the gadget's optimum is
    at most k + q + 3qk."""
    gadget = build_ex3c_gadget(inst, k)
    bound = k + inst.q + 3 * inst.q * k
    result = exact_kve(gadget.graph, k, budget)
    reachable = result.feasible and result.optimum <= bound
    return has_exact_cover(inst) == reachable


def build_ve_to_kve(g: Graph, k: int) -> GadgetGraph:
    """Lift a plain ve-domination instance to a k-ve one: add a clique C of
    size k-1 joined to every original vertex, a vertex v joined to C, and a
    pendant u on v.  Optima shift by exactly k."""
    if k < 2:
        raise InputError(f"gadget needs k >= 2, got {k}")
    n = g.n
    cs = range(n, n + k - 1)
    v_id = n + k - 1
    u_id = n + k
    edges = list(g.edges)
    edges.extend((x, y) for x, y in combinations(cs, 2))
    edges.extend((x, c) for x in range(n) for c in cs)
    edges.extend((c, v_id) for c in cs)
    edges.append((v_id, u_id))
    roles = (
        [f"g:{i}" for i in range(n)]
        + [f"c:{t}" for t in range(k - 1)]
        + ["v", "u"]
    )
    graph = Graph(n + k + 1, edges, validate=False)
    provenance = {"reduction": "ve2kve", "k": k, "source_n": n, "source_edges": g.edges}
    return GadgetGraph(graph=graph, roles=tuple(roles), provenance=provenance)


def check_ve_to_kve_claim(g: Graph, k: int, budget: int | None = None) -> bool:
    """Verify gamma_kve(G') = gamma_ve(G) + k with both optima from the
    exact oracle."""
    gadget = build_ve_to_kve(g, k)
    base = exact_ve(g, budget)
    lifted = exact_kve(gadget.graph, k, budget)
    return lifted.optimum == base.optimum + k


def build_ktuple_to_kve(g: Graph) -> GadgetGraph:
    """Attach one pendant vertex to every original vertex; raises the
    maximum degree by exactly one.  The intended use pairs a source of
    maximum degree k+2 (recorded in provenance) with k-ve domination."""
    n = g.n
    edges = list(g.edges)
    edges.extend((i, n + i) for i in range(n))
    roles = [f"g:{i}" for i in range(n)] + [f"pend:{i}" for i in range(n)]
    graph = Graph(2 * n, edges, validate=False)
    provenance = {
        "reduction": "ktuple2kve",
        "source_n": n,
        "source_max_degree": g.max_degree(),
        "source_edges": g.edges,
    }
    return GadgetGraph(graph=graph, roles=tuple(roles), provenance=provenance)


def check_ktuple_claim(g: Graph, k: int, budget: int | None = None) -> bool:
    """Compare the k-tuple optimum of g with the k-ve optimum of the pendant
    gadget, treating matching infeasibility verdicts as equal.

    The equality holds whenever the source instance is k-tuple feasible
    (every closed neighbourhood has size at least k); a source with some
    |N[v]| = k-1 exactly is infeasible while its gadget is not, and the
    checker faithfully reports the mismatch.
    """
    source = exact_ktuple(g, k, budget)
    lifted = exact_kve(build_ktuple_to_kve(g).graph, k, budget)
    return source.optimum == lifted.optimum


_EX3C_SIZES = {
    "a": lambda q, m, k: 3 * q,
    "b": lambda q, m, k: m,
    "p": lambda q, m, k: k - 2,
    "v": lambda q, m, k: 1,
    "u": lambda q, m, k: 1,
    "y": lambda q, m, k: 3 * q,
    "q": lambda q, m, k: 3 * q * (k - 1),
    "z": lambda q, m, k: 3 * q,
    "l": lambda q, m, k: 3 * q,
}


def audit_roles(gadget: GadgetGraph) -> None:
    """Structural audit: role cardinalities match the construction and the
    actual edge set equals the one the roles dictate, rule by rule.  Raises
    ValueError on any discrepancy."""
    prov = gadget.provenance
    kind = prov["reduction"]
    if kind == "ex3c":
        expected = _expected_ex3c_edges(gadget)
    elif kind == "ve2kve":
        expected = _expected_ve2kve_edges(gadget)
    elif kind == "ktuple2kve":
        expected = _expected_ktuple_edges(gadget)
    else:
        raise ValueError(f"unknown reduction {kind!r}")
    actual = set(gadget.graph.edges)
    if actual != expected:
        missing = sorted(expected - actual)[:5]
        surplus = sorted(actual - expected)[:5]
        raise ValueError(
            f"edge set differs from the roles' construction: "
            f"missing {missing}, surplus {surplus}"
        )


def _norm(u, v):
    return (u, v) if u < v else (v, u)


def _expected_ex3c_edges(gadget: GadgetGraph) -> set:
    prov = gadget.provenance
    q, k = prov["q"], prov["k"]
    m = len(prov["collection"])
    loc = {role: v for v, role in enumerate(gadget.roles)}
    if len(loc) != len(gadget.roles):
        raise ValueError("duplicate roles")
    for kind, size_of in _EX3C_SIZES.items():
        count = len(gadget.vertices_of(kind))
        if count != size_of(q, m, k):
            raise ValueError(f"role block {kind!r} has {count} vertices")
    expected = set()
    bs = [loc[f"b:{j}"] for j in range(m)]
    ps = [loc[f"p:{t}"] for t in range(k - 2)]
    expected.update(_norm(x, y) for x, y in combinations(bs + ps, 2))
    for j, triple in enumerate(prov["collection"]):
        expected.update(_norm(loc[f"a:{i}"], loc[f"b:{j}"]) for i in triple)
    expected.add(_norm(loc["v"], loc["u"]))
    expected.update(_norm(loc["v"], p) for p in ps)
    for i in range(3 * q):
        block = [loc[f"q:{i}:{t}"] for t in range(k - 1)]
        expected.add(_norm(loc[f"a:{i}"], loc[f"y:{i}"]))
        expected.update(_norm(x, y) for x, y in combinations(block, 2))
        expected.update(_norm(loc[f"y:{i}"], x) for x in block)
        expected.add(_norm(loc[f"z:{i}"], loc[f"l:{i}"]))
        expected.update(_norm(loc[f"z:{i}"], x) for x in block)
    return expected


def _expected_ve2kve_edges(gadget: GadgetGraph) -> set:
    prov = gadget.provenance
    k, n = prov["k"], prov["source_n"]
    loc = {role: v for v, role in enumerate(gadget.roles)}
    origs = [loc[f"g:{i}"] for i in range(n)]
    cs = [loc[f"c:{t}"] for t in range(k - 1)]
    expected = {_norm(origs[a], origs[b]) for a, b in prov["source_edges"]}
    expected.update(_norm(x, y) for x, y in combinations(cs, 2))
    expected.update(_norm(x, c) for x in origs for c in cs)
    expected.update(_norm(c, loc["v"]) for c in cs)
    expected.add(_norm(loc["v"], loc["u"]))
    return expected


def _expected_ktuple_edges(gadget: GadgetGraph) -> set:
    prov = gadget.provenance
    n = prov["source_n"]
    loc = {role: v for v, role in enumerate(gadget.roles)}
    expected = {
        _norm(loc[f"g:{a}"], loc[f"g:{b}"]) for a, b in prov["source_edges"]
    }
    expected.update(_norm(loc[f"g:{i}"], loc[f"pend:{i}"]) for i in range(n))
    return expected
