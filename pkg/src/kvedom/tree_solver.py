"""Exact minimum demand-labeled dominating sets of trees in linear time.

The solver works on a generalized instance: every vertex carries a label in
{B, R} (R-labeled vertices are forced into the solution) and every edge e
carries an integer demand s(e) on |cover(e) intersect D|, where cover(e) is
the union of the endpoints' closed neighbourhoods.  Uniform labels t=B and
s=k recover minimum k-vertex-edge domination.

Vertices are consumed bottom-up along the reverse-BFS order: when a support
vertex is processed all of its children are still present and all of them
are leaves (their own subtrees collapsed earlier), so one of five local
reduction branches applies and the children are deleted.  The recursion
grounds out in a star around the root, completed greedily.

Two interchangeable kernels execute the loop: a compiled extension
(kvedom._tree_core, built from Cython) and a pure-Python fallback.  The
default picks the compiled one when present.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import InputError
from .graph import RootedTree

try:
    from . import _tree_core
except ImportError:  # pragma: no cover - depends on the build
    _tree_core = None

LABEL_PLAIN = "B"
LABEL_FORCED = "R"


def available_kernels() -> tuple[str, ...]:
    return ("python", "native") if _tree_core is not None else ("python",)


@dataclass(frozen=True)
class STLabeling:
    """Per-vertex labels ("B"/"R") and per-edge demands keyed by (u, v), u < v."""

    t: tuple[str, ...]
    s: dict[tuple[int, int], int]

    @classmethod
    def uniform(cls, tree: RootedTree, k: int) -> "STLabeling":
        """All vertices plain, every edge demanding k."""
        if k < 1:
            raise InputError(f"k must be at least 1, got {k}")
        g = tree.graph
        return cls(t=(LABEL_PLAIN,) * g.n, s={e: k for e in g.edges})

    def validate(self, tree: RootedTree) -> None:
        g = tree.graph
        if len(self.t) != g.n:
            raise InputError(f"labeling covers {len(self.t)} vertices, tree has {g.n}")
        for v, lab in enumerate(self.t):
            if lab not in (LABEL_PLAIN, LABEL_FORCED):
                raise InputError(f"vertex {v} has label {lab!r}, expected 'B' or 'R'")
        keys = set(self.s)
        expected = set(g.edges)
        if keys != expected:
            missing = expected - keys
            extra = keys - expected
            raise InputError(
                f"edge demands do not match the tree edges "
                f"(missing {sorted(missing)}, extraneous {sorted(extra)})"
            )
        for e, val in self.s.items():
            if val < 0:
                raise InputError(f"edge {e} has negative demand {val}")


def _children_csr(parent) -> tuple[list[int], list[int]]:
    """Flat children arrays: ids of v's children sit at
    child_list[child_start[v]:child_start[v+1]], ascending."""
    n = len(parent)
    counts = [0] * n
    for p in parent:
        if p >= 0:
            counts[p] += 1
    child_start = [0] * (n + 1)
    acc = 0
    for v in range(n):
        acc += counts[v]
        child_start[v + 1] = acc
    cursor = child_start[:n]
    child_list = [0] * (n - 1 if n else 0)
    for v in range(n):
        p = parent[v]
        if p >= 0:
            child_list[cursor[p]] = v
            cursor[p] += 1
    return child_start, child_list


@dataclass
class SolverState:
    """Mutable bookkeeping for one solve.  The shrinking tree is implicit
    (children of a pending vertex are all still alive); demands live on the
    parent edge of each non-root vertex; chosen vertices accumulate."""

    root: int
    parent: tuple[int, ...]
    order: tuple[int, ...]
    child_start: list[int]
    child_list: list[int]
    demand_up: list[int]
    forced: list[int]
    chosen: list[int] = field(default_factory=list)
    infeasible: bool = False

    @classmethod
    def from_tree(cls, tree: RootedTree, labels: STLabeling) -> "SolverState":
        labels.validate(tree)
        demand_up, forced = _labels_to_arrays(tree, labels)
        return cls._from_arrays(tree, demand_up, forced)

    @classmethod
    def _from_arrays(cls, tree: RootedTree, demand_up, forced) -> "SolverState":
        child_start, child_list = _children_csr(tree.parent)
        return cls(
            root=tree.root,
            parent=tree.parent,
            order=tree.order,
            child_start=child_start,
            child_list=child_list,
            demand_up=demand_up,
            forced=forced,
        )

    def children_of(self, v: int) -> list[int]:
        return self.child_list[self.child_start[v]:self.child_start[v + 1]]


def _labels_to_arrays(tree: RootedTree, labels: STLabeling):
    n = tree.graph.n
    demand_up = [0] * n
    for v in range(n):
        p = tree.parent[v]
        if p >= 0:
            key = (v, p) if v < p else (p, v)
            demand_up[v] = labels.s[key]
    forced = [1 if lab == LABEL_FORCED else 0 for lab in labels.t]
    return demand_up, forced


def process_support_vertex(state: SolverState, u: int) -> int:
    """Apply the one reduction branch that matches support vertex u and
    delete its children; returns the branch number (1..5).

    Residual neighbourhood sizes come from static child counts: every child
    of a pending vertex is still alive because deeper levels collapsed
    first, and the parent side is untouched.

    After the branch update the parent edge's residual demand is capped at
    deg(w)+1, the most the surviving cover (u, w, and w's other
    neighbours) can ever supply; any overflow is met by additional leaves
    of u right now, in ascending id order.  Skipping this supplement can
    turn a feasible instance into a false "infeasible": demands above the
    cap are only reachable through leaves that are about to be deleted.
    """
    kids = state.children_of(u)
    w = state.parent[u]
    demand_up = state.demand_up
    forced = state.forced
    nkids = len(kids)
    deg_u = nkids + 1
    deg_w = (state.child_start[w + 1] - state.child_start[w]) + (
        0 if w == state.root else 1
    )
    size_nu = deg_u + 1
    size_union = deg_u + deg_w
    s_max = max(demand_up[c] for c in kids)
    s_uw = demand_up[u]

    if s_max > size_nu or s_uw > size_union:
        state.infeasible = True
        return 1

    if s_max == size_nu or s_uw == size_union:
        forced[u] = 1
        forced[w] = 1
        demand_up[u] = max(s_uw - nkids, 0)
        state.chosen.extend(kids)
        return 2

    marked = [c for c in kids if forced[c]]
    n_marked = len(marked)
    unmarked_taken = 0
    if s_max <= n_marked + forced[u] + forced[w]:
        branch = 3
        s_new = max(s_uw - n_marked, 0)
    elif s_max - n_marked == 1:
        branch = 4
        forced[w] = 1
        s_new = max(s_uw - n_marked, 0)
    else:
        branch = 5
        forced[w] = 1
        forced[u] = 1
        s_new = max(s_uw - s_max + 2, 0)
        unmarked_taken = s_max - n_marked - 2

    cap = deg_w + 1
    if s_new > cap:
        unmarked_taken += s_new - cap
        s_new = cap
    demand_up[u] = s_new
    state.chosen.extend(marked)
    if unmarked_taken > 0:
        state.chosen.extend(
            [c for c in kids if not forced[c]][:unmarked_taken]
        )
    return branch


def finalize_residual(state: SolverState):
    """Complete the solution on the residual star around the root.

    Every residual edge is pendant at the root, so each edge's cover set is
    the whole residual vertex set and the completion just has to reach the
    maximum residual demand: forced vertices first, then the centre, then
    leaves in id order.  Returns the final sorted solution, or None when the
    demand exceeds the residual size.
    """
    if state.infeasible:
        return None
    root = state.root
    kids = state.children_of(root)
    residual = [root] + kids
    need = max((state.demand_up[c] for c in kids), default=0)
    if need > len(residual):
        state.infeasible = True
        return None
    picked = {v for v in residual if state.forced[v]}
    if len(picked) < need:
        for v in residual:
            if v not in picked:
                picked.add(v)
                if len(picked) == need:
                    break
    state.chosen.extend(picked)
    state.chosen.sort()
    return state.chosen


def _solve_python(state: SolverState):
    child_start = state.child_start
    for u in state.order[:-1]:
        if child_start[u] != child_start[u + 1]:
            process_support_vertex(state, u)
            if state.infeasible:
                return None
    return finalize_residual(state)


def _native_csr(parent_arr, n):
    import numpy as np

    nonroot = np.flatnonzero(parent_arr >= 0).astype(np.int32)
    counts = np.bincount(parent_arr[nonroot], minlength=n)
    child_start = np.zeros(n + 1, dtype=np.int32)
    np.cumsum(counts, out=child_start[1:])
    child_list = nonroot[np.argsort(parent_arr[nonroot], kind="stable")]
    return child_start, np.ascontiguousarray(child_list, dtype=np.int32)


def _solve_native(tree: RootedTree, demand_up, forced):
    import numpy as np

    n = tree.graph.n
    parent_arr = np.asarray(tree.parent, dtype=np.int32)
    order_arr = np.asarray(tree.order, dtype=np.int32)
    child_start, child_list = _native_csr(parent_arr, n)
    status, count, out = _tree_core.run(
        n,
        tree.root,
        parent_arr,
        order_arr,
        child_start,
        child_list,
        np.ascontiguousarray(demand_up, dtype=np.int64),
        np.ascontiguousarray(forced, dtype=np.int8),
    )
    if status != 0:
        return None
    return np.sort(out[:count]).tolist()


def _resolve_kernel(kernel: str) -> str:
    if kernel == "auto":
        return "native" if _tree_core is not None else "python"
    if kernel not in ("python", "native"):
        raise InputError(f"unknown kernel {kernel!r}")
    if kernel == "native" and _tree_core is None:
        raise InputError("native kernel requested but the extension is not built")
    return kernel


def _check_order(tree: RootedTree) -> None:
    if tree.graph.n and (not tree.order or tree.order[-1] != tree.root):
        raise InputError("processing order must end at the root (reverse BFS)")


def solve_st(tree: RootedTree, labels: STLabeling, *, kernel: str = "auto"):
    """Minimum solution containing every R vertex and meeting every edge
    demand, or None when no solution exists."""
    _check_order(tree)
    which = _resolve_kernel(kernel)
    if which == "native":
        labels.validate(tree)
        demand_up, forced = _labels_to_arrays(tree, labels)
        return _solve_native(tree, demand_up, forced)
    return _solve_python(SolverState.from_tree(tree, labels))


def solve_kve_tree(tree: RootedTree, k: int, *, kernel: str = "auto"):
    """Minimum k-vertex-edge dominating set of a tree: uniform demands k,
    no forced vertices.  Returns None when infeasible."""
    if k < 1:
        raise InputError(f"k must be at least 1, got {k}")
    _check_order(tree)
    n = tree.graph.n
    which = _resolve_kernel(kernel)
    if which == "native":
        import numpy as np

        demand_up = np.full(n, k, dtype=np.int64)
        demand_up[tree.root] = 0
        return _solve_native(tree, demand_up, np.zeros(n, dtype=np.int8))
    demand_up = [k] * n
    demand_up[tree.root] = 0
    state = SolverState._from_arrays(tree, demand_up, [0] * n)
    return _solve_python(state)
