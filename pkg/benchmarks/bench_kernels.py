"""Compare the compiled and pure-Python simplex kernels.

Two workloads: raw pivots on random integer tableaux, and end-to-end shadow
enumeration on seeded random instances (all LPs go through the kernels).

    python benchmarks/bench_kernels.py [--instances 15] [--repeat 3]
"""

import argparse
import os
import random
import sys
import time
from contextlib import contextmanager

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "tests"))

from polyproj import _kernels_py, kernels  # noqa: E402
from polyproj.shadow import enumerate_shadow_facets  # noqa: E402

try:
    from polyproj import _ckernels
except ImportError:
    _ckernels = None


@contextmanager
def backend(mod):
    saved = kernels.pivot, kernels.ratio_test, kernels.entering
    kernels.pivot, kernels.ratio_test, kernels.entering = mod.pivot, mod.ratio_test, mod.entering
    try:
        yield
    finally:
        kernels.pivot, kernels.ratio_test, kernels.entering = saved


def random_tableau(rng, rows, cols):
    return [[rng.randint(-50, 50) for _ in range(cols)] for _ in range(rows)]


def bench_pivots(mod, seed, rows=30, cols=60, pivots=200):
    rng = random.Random(seed)
    T = random_tableau(rng, rows, cols)
    D = 1
    t = time.perf_counter()
    for _ in range(pivots):
        r = rng.randrange(rows)
        s = rng.randrange(cols - 1)
        if T[r][s] == 0:
            continue
        D = mod.pivot(T, r, s, D)
        # keep numbers bounded so the run measures the loop, not bignums
        T = random_tableau(rng, rows, cols) if abs(D) > 10**30 else T
        D = 1 if abs(D) > 10**30 else D
    return time.perf_counter() - t


def bench_shadow(mod, instances):
    with backend(mod):
        t = time.perf_counter()
        for inst in instances:
            enumerate_shadow_facets(inst.P, inst.G)
        return time.perf_counter() - t


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--instances", type=int, default=15)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)

    from corpus import corpus

    insts = corpus(args.instances)
    mods = [("python", _kernels_py)] + ([("cython", _ckernels)] if _ckernels else [])
    if _ckernels is None:
        print("compiled kernels not built; timing the fallback only")
    rows = []
    for name, mod in mods:
        piv = min(bench_pivots(mod, seed) for seed in range(args.repeat))
        sh = min(bench_shadow(mod, insts) for _ in range(args.repeat))
        rows.append((name, piv, sh))
    print(f"{'backend':8} {'pivots (s)':>12} {'shadow (s)':>12}")
    for name, piv, sh in rows:
        print(f"{name:8} {piv:12.4f} {sh:12.4f}")
    if len(rows) == 2:
        print(f"speedup  {rows[0][1] / rows[1][1]:12.2f}x {rows[0][2] / rows[1][2]:12.2f}x")


if __name__ == "__main__":
    main()
