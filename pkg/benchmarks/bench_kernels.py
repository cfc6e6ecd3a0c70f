#!/usr/bin/env python3
"""Compare the compiled tree-solver kernel against the pure-Python fallback.

Times full solve_kve_tree calls (labeling setup included, tree construction
excluded) on seeded random trees and reports medians per kernel plus the
growth ratio between consecutive sizes, which should stay near 2 for a
linear-time solver.

    python3 benchmarks/bench_kernels.py --sizes 17 18 19 --reps 3
"""

import argparse
import statistics
import time

from kvedom import available_kernels, bfs_rooted, gen_random_tree, solve_kve_tree


def bench(size: int, k: int, seeds, reps: int, kernel: str) -> float:
    samples = []
    for seed in seeds:
        tree = bfs_rooted(gen_random_tree(size, seed), 0)
        for _ in range(reps):
            start = time.perf_counter()
            d = solve_kve_tree(tree, k, kernel=kernel)
            samples.append(time.perf_counter() - start)
            assert d is not None
    return statistics.median(samples)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--sizes", type=int, nargs="+", default=[15, 16, 17, 18, 19],
                        help="tree sizes as powers of two")
    parser.add_argument("-k", type=int, default=2)
    parser.add_argument("--reps", type=int, default=3)
    parser.add_argument("--seeds", type=int, nargs="+", default=[1, 2, 3])
    args = parser.parse_args()

    kernels = available_kernels()
    print(f"kernels: {', '.join(kernels)}   (k={args.k})")
    header = f"{'n':>10}" + "".join(f"{kern + ' ms':>14}{'ratio':>8}" for kern in kernels)
    if len(kernels) == 2:
        header += f"{'speedup':>10}"
    print(header)
    last = {kern: None for kern in kernels}
    for exp in args.sizes:
        size = 1 << exp
        row = f"{size:>10}"
        medians = {}
        for kern in kernels:
            med = bench(size, args.k, args.seeds, args.reps, kern)
            medians[kern] = med
            ratio = "" if last[kern] is None else f"{med / last[kern]:.2f}"
            row += f"{med * 1000:>14.1f}{ratio:>8}"
            last[kern] = med
        if len(kernels) == 2:
            row += f"{medians['python'] / medians['native']:>10.1f}x"
        print(row)


if __name__ == "__main__":
    main()
