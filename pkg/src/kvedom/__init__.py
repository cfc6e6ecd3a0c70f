"""Toolkit for minimum k-vertex-edge domination: an exact linear-time tree
solver, a greedy logarithmic approximation for general graphs, certified
exact oracles for small instances, and hardness-reduction gadget builders."""

from .errors import BudgetExceededError, InputError
from .graph import (
    Graph,
    RootedTree,
    bfs_rooted,
    closed_neighborhood,
    connected_components,
    edge_cover_set,
    feasible,
    first_violated_edge,
    gen_random_graph,
    gen_random_tree,
    induced_subgraph,
    is_chordal,
    tree_center,
    verify_kve,
)
from .greedy import MulticoverInstance, approx_kve, build_cover_instance, greedy_multicover
from .oracle import (
    DEFAULT_BUDGET,
    OracleResult,
    exact_ktuple,
    exact_kve,
    exact_ve,
    minimum_multicover,
)
from .reductions import (
    Ex3CInstance,
    GadgetGraph,
    audit_roles,
    build_ex3c_gadget,
    build_ktuple_to_kve,
    build_ve_to_kve,
    check_ex3c_claim,
    check_ktuple_claim,
    check_ve_to_kve_claim,
    has_exact_cover,
)
from .tree_solver import (
    STLabeling,
    SolverState,
    available_kernels,
    finalize_residual,
    process_support_vertex,
    solve_kve_tree,
    solve_st,
)

__version__ = "0.1.0"

__all__ = [
    "BudgetExceededError",
    "DEFAULT_BUDGET",
    "Ex3CInstance",
    "GadgetGraph",
    "Graph",
    "InputError",
    "MulticoverInstance",
    "OracleResult",
    "RootedTree",
    "STLabeling",
    "SolverState",
    "approx_kve",
    "audit_roles",
    "available_kernels",
    "bfs_rooted",
    "build_cover_instance",
    "build_ex3c_gadget",
    "build_ktuple_to_kve",
    "build_ve_to_kve",
    "check_ex3c_claim",
    "check_ktuple_claim",
    "check_ve_to_kve_claim",
    "closed_neighborhood",
    "connected_components",
    "edge_cover_set",
    "exact_ktuple",
    "exact_kve",
    "exact_ve",
    "feasible",
    "finalize_residual",
    "first_violated_edge",
    "gen_random_graph",
    "gen_random_tree",
    "greedy_multicover",
    "has_exact_cover",
    "induced_subgraph",
    "is_chordal",
    "minimum_multicover",
    "process_support_vertex",
    "solve_kve_tree",
    "solve_st",
    "tree_center",
    "verify_kve",
]
