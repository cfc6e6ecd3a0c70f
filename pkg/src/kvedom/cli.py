"""Command-line front end.

Exit codes are uniform across subcommands: 0 for solved/valid/PASS, 2 for
infeasible/invalid/FAIL, 1 for operational errors (bad input, exhausted
search budget, unreadable files).  All randomness flows through explicit
seeds, so identical invocations produce byte-identical output.
"""

from __future__ import annotations

import argparse
import sys

from . import io as formats
from .errors import BudgetExceededError, InputError
from .graph import (
    Graph,
    bfs_rooted,
    connected_components,
    feasible,
    first_violated_edge,
    gen_random_graph,
    gen_random_tree,
    induced_subgraph,
    tree_center,
)
from .greedy import approx_kve
from .oracle import exact_kve
from .reductions import (
    build_ex3c_gadget,
    build_ktuple_to_kve,
    build_ve_to_kve,
    check_ex3c_claim,
    check_ktuple_claim,
    check_ve_to_kve_claim,
)
from .tree_solver import STLabeling, solve_st

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_INFEASIBLE = 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kvedom",
        description="Solve, verify and transform k-vertex-edge domination instances.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_solve = sub.add_parser("solve", help="compute a k-ve dominating set")
    p_solve.add_argument("--algo", choices=("tree", "greedy", "exact"), required=True)
    p_solve.add_argument("-k", type=int, required=True)
    p_solve.add_argument("--labels", help="labeling overlay file (tree algorithm only)")
    p_solve.add_argument("--budget", type=int, help="search-node ceiling (exact algorithm)")
    p_solve.add_argument("--kernel", choices=("auto", "python", "native"), default="auto")
    p_solve.add_argument("--format", choices=("edgelist", "dimacs"), default="edgelist")
    p_solve.add_argument("input")

    p_verify = sub.add_parser("verify", help="check a solution file")
    p_verify.add_argument("-k", type=int, required=True)
    p_verify.add_argument("--solution", required=True)
    p_verify.add_argument("--format", choices=("edgelist", "dimacs"), default="edgelist")
    p_verify.add_argument("input")

    p_reduce = sub.add_parser("reduce", help="build a reduction gadget")
    p_reduce.add_argument("reduction", choices=("ex3c", "ve2kve", "ktuple2kve"))
    p_reduce.add_argument("-k", type=int)
    p_reduce.add_argument("--check", action="store_true",
                          help="also run the matching claim checker")
    p_reduce.add_argument("--budget", type=int)
    p_reduce.add_argument("--output", "-o", required=True,
                          help="prefix for the .edges and .roles files")
    p_reduce.add_argument("--format", choices=("edgelist", "dimacs"), default="edgelist")
    p_reduce.add_argument("input")

    p_gen = sub.add_parser("gen", help="generate a random instance")
    p_gen.add_argument("family", choices=("tree", "graph"))
    p_gen.add_argument("-n", type=int, required=True)
    p_gen.add_argument("-p", type=float, default=0.5, help="edge probability (graph family)")
    p_gen.add_argument("--seed", type=int, required=True)
    p_gen.add_argument("--output", "-o", help="write here instead of stdout")

    p_claim = sub.add_parser("check-claim", help="run a reduction claim checker")
    p_claim.add_argument("reduction", choices=("ex3c", "ve2kve", "ktuple2kve"))
    p_claim.add_argument("-k", type=int, required=True)
    p_claim.add_argument("--budget", type=int)
    p_claim.add_argument("--format", choices=("edgelist", "dimacs"), default="edgelist")
    p_claim.add_argument("input")

    return parser


def _read(path: str) -> str:
    with open(path, "r", encoding="utf-8") as handle:
        return handle.read()


def _load_graph(args) -> Graph:
    return formats.parse_graph(_read(args.input), args.format)


def _require_k(k: int) -> None:
    if k is None or k < 1:
        raise InputError(f"k must be at least 1, got {k}")


def _solve_tree(g: Graph, k: int, labels_text: str | None, kernel: str):
    """Solve per component (each must be a tree, rooted at its center)."""
    labeling = None
    if labels_text is not None:
        labeling = formats.parse_labeling(labels_text, g, k)
    solution = []
    for comp in connected_components(g):
        sub, old_ids = induced_subgraph(g, comp)
        if sub.m != sub.n - 1:
            raise InputError("tree algorithm needs a tree or forest input")
        tree = bfs_rooted(sub, tree_center(sub))
        if labeling is None:
            sub_labels = STLabeling.uniform(tree, k)
        else:
            back = {old: new for new, old in enumerate(old_ids)}
            sub_labels = STLabeling(
                t=tuple(labeling.t[old] for old in old_ids),
                s={
                    (back[a], back[b]): val
                    for (a, b), val in labeling.s.items()
                    if a in back and b in back
                },
            )
        part = solve_st(tree, sub_labels, kernel=kernel)
        if part is None:
            return None
        solution.extend(old_ids[v] for v in part)
    return sorted(solution)


def cmd_solve(args) -> int:
    _require_k(args.k)
    g = _load_graph(args)
    if args.labels is not None and args.algo != "tree":
        raise InputError("--labels is only meaningful with --algo tree")
    if args.algo == "tree":
        labels_text = _read(args.labels) if args.labels is not None else None
        result = _solve_tree(g, args.k, labels_text, args.kernel)
    elif args.algo == "greedy":
        result = approx_kve(g, args.k)
    else:
        oracle = exact_kve(g, args.k, args.budget)
        result = oracle.witness
    if result is None:
        print("INFEASIBLE")
        return EXIT_INFEASIBLE
    sys.stdout.write(formats.format_solution(result))
    return EXIT_OK


def cmd_verify(args) -> int:
    _require_k(args.k)
    g = _load_graph(args)
    members = formats.parse_solution(_read(args.solution))
    for v in members:
        g.check_vertex(v)
    violated = first_violated_edge(g, members, args.k)
    if violated is None:
        print("VALID")
        return EXIT_OK
    print(f"INVALID {violated[0]} {violated[1]}")
    return EXIT_INFEASIBLE


def cmd_reduce(args) -> int:
    if args.reduction == "ex3c":
        _require_k(args.k)
        inst = formats.parse_ex3c(_read(args.input))
        gadget = build_ex3c_gadget(inst, args.k)
    elif args.reduction == "ve2kve":
        _require_k(args.k)
        inst = _load_graph(args)
        gadget = build_ve_to_kve(inst, args.k)
    else:
        inst = _load_graph(args)
        gadget = build_ktuple_to_kve(inst)
    with open(args.output + ".edges", "w", encoding="utf-8") as handle:
        handle.write(formats.write_edge_list(gadget.graph))
    with open(args.output + ".roles", "w", encoding="utf-8") as handle:
        handle.write(formats.write_roles(gadget))
    if args.check:
        _require_k(args.k)
        if args.reduction == "ex3c":
            ok = check_ex3c_claim(inst, args.k, args.budget)
        elif args.reduction == "ve2kve":
            ok = check_ve_to_kve_claim(inst, args.k, args.budget)
        else:
            ok = check_ktuple_claim(inst, args.k, args.budget)
        print("PASS" if ok else "FAIL")
        return EXIT_OK if ok else EXIT_INFEASIBLE
    return EXIT_OK


def cmd_gen(args) -> int:
    if args.family == "tree":
        g = gen_random_tree(args.n, args.seed)
    else:
        g = gen_random_graph(args.n, args.p, args.seed)
    text = formats.write_edge_list(g)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_check_claim(args) -> int:
    _require_k(args.k)
    if args.reduction == "ex3c":
        inst = formats.parse_ex3c(_read(args.input))
        ok = check_ex3c_claim(inst, args.k, args.budget)
    elif args.reduction == "ve2kve":
        ok = check_ve_to_kve_claim(_load_graph(args), args.k, args.budget)
    else:
        ok = check_ktuple_claim(_load_graph(args), args.k, args.budget)
    print("PASS" if ok else "FAIL")
    return EXIT_OK if ok else EXIT_INFEASIBLE


_COMMANDS = {
    "solve": cmd_solve,
    "verify": cmd_verify,
    "reduce": cmd_reduce,
    "gen": cmd_gen,
    "check-claim": cmd_check_claim,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except (InputError, BudgetExceededError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
