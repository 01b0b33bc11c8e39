"""Time the compiled kernels against the interpreted build of the same source.

    python3 benchmarks/bench_kernels.py [--instances 20] [--repeat 3]

Compilation happens once in a warm-up call and is reported separately.
"""

import argparse
import time

import numpy as np

from wmscss import _kernels
from wmscss.instances import gen_random_strong
from wmscss.lp import solve_wmscss_lp
from wmscss.rational import scale_to_integers


def workloads(count):
    cases = []
    for seed in range(count):
        n = 5 + seed % 4
        g = gen_random_strong(n, min(18, 2 * n + 4), (1, 9), seed=seed)
        x = solve_wmscss_lp(g).solution
        d, cap = scale_to_integers(x.values)
        w = np.array([int(a.weight) for a in g.arcs], dtype=np.int64)
        cases.append((g, np.array(cap, dtype=np.int64), d, w))
    return cases


def run_extract(kern, cases):
    for g, cap, d, _ in cases:
        for root in range(g.n):
            kern.extract_in(g.n, g.tails, g.heads, cap.copy(), root, np.int64(d - 1))


def run_search(kern, cases):
    for g, _, _, w in cases:
        start = np.ones(g.m, np.bool_)
        kern.min_scss(g.n, g.tails, g.heads, w, np.int64(w.sum()), start)


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def main():
    p = argparse.ArgumentParser()
    p.add_argument("--instances", type=int, default=20)
    p.add_argument("--repeat", type=int, default=3)
    args = p.parse_args()
    if _kernels.numba_kernels is None:
        raise SystemExit("numba is not installed; nothing to compare")
    cases = workloads(args.instances)

    t0 = time.perf_counter()
    run_extract(_kernels.numba_kernels, cases[:1])
    run_search(_kernels.numba_kernels, cases[:1])
    print(f"compile+first call  {time.perf_counter() - t0:8.3f} s")

    print(f"{'kernel':<22}{'numba':>10}{'python':>10}{'speedup':>10}")
    for name, fn in [("extract_in (all roots)", run_extract), ("min_scss", run_search)]:
        fast = best_of(lambda: fn(_kernels.numba_kernels, cases), args.repeat)
        slow = best_of(lambda: fn(_kernels.python_kernels, cases), 1)
        print(f"{name:<22}{fast:10.4f}{slow:10.4f}{slow / fast:9.1f}x")


if __name__ == "__main__":
    main()
