"""Benchmark the pure-Python word kernels against the compiled twin.

Runs the hot kernels (lean reduction, canonical forms, bounded BFS) on
identical seeded workloads through both backends and prints a comparison
table.  Exits gracefully when the compiled extension is unavailable.

Usage: python3 benchmarks/bench_kernels.py [--repeat N] [--seed S]
"""

from __future__ import annotations

import argparse
import random
import time

from cactus_groups import _kernels_py

try:
    from cactus_groups import _kernels_cy
except ImportError:
    _kernels_cy = None


def random_words(rng: random.Random, n: int, length: int, count: int) -> list[tuple]:
    alphabet = range(1, 1 << n)
    return [tuple(rng.choice(alphabet) for _ in range(length)) for _ in range(count)]


def bench(fn, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def workloads(seed: int) -> list[tuple[str, dict]]:
    rng = random.Random(seed)
    long_words = random_words(rng, 4, 40, 300)
    mid_words = random_words(rng, 4, 24, 300)
    small_words = random_words(rng, 4, 8, 5000)
    alphabet3 = tuple(range(1, 8))
    seeds3 = [tuple(rng.choice(alphabet3) for _ in range(k)) for k in range(4) for _ in range(40)]
    return [
        ("lean_reduce, len 40", {"run": lambda k: [k.lean_reduce(w) for w in long_words]}),
        ("lex_least, len 24", {"run": lambda k: [k.lex_least(w) for w in mid_words]}),
        (
            "canonical_if_lean, len 8",
            {"run": lambda k: [k.canonical_if_lean(w) for w in small_words]},
        ),
        (
            "reachable_class, bound 6",
            {"run": lambda k: k.reachable_class((3, 7, 5, 7), alphabet3, 6, 10**6)},
        ),
        (
            "component_ids, bound 5",
            {"run": lambda k: k.component_ids(seeds3, alphabet3, 5, 10**6)},
        ),
    ]


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3, help="timing repetitions, best kept")
    parser.add_argument("--seed", type=int, default=20250817)
    args = parser.parse_args()

    if _kernels_cy is None:
        print("compiled kernel extension not built; nothing to compare")
        print("(reinstall without CACTUS_GROUPS_PURE=1 to build it)")
        return

    rows = []
    for name, workload in workloads(args.seed):
        run = workload["run"]
        t_py = bench(lambda: run(_kernels_py), args.repeat)
        t_cy = bench(lambda: run(_kernels_cy), args.repeat)
        rows.append((name, t_py, t_cy))

    width = max(len(name) for name, _, _ in rows)
    print(f"{'workload':<{width}}  {'python':>10}  {'cython':>10}  {'speedup':>8}")
    for name, t_py, t_cy in rows:
        ratio = t_py / t_cy if t_cy > 0 else float("inf")
        print(f"{name:<{width}}  {t_py * 1e3:>8.2f}ms  {t_cy * 1e3:>8.2f}ms  {ratio:>7.1f}x")


if __name__ == "__main__":
    main()
