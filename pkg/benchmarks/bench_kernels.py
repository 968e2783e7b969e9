"""Compiled kernels vs the pure-Python twin.

    python3 benchmarks/bench_kernels.py [--repeat 3]

Both implementations get identical inputs and must return identical
results; the script refuses to report timings otherwise.
"""

import argparse
import time

import numpy as np

from sturmrect import frac_mul, kernels, parse_alpha, points_of_alpha

py = kernels.python


def best_of(repeat, fn, *args):
    best, out = float("inf"), None
    for _ in range(repeat):
        t = time.perf_counter()
        out = fn(*args)
        best = min(best, time.perf_counter() - t)
    return best, out


def same(a, b):
    if isinstance(a, tuple):
        return all(same(x, y) for x, y in zip(a, b))
    if isinstance(a, np.ndarray):
        return np.array_equal(a, b)
    return a == b


def cases(alpha):
    cf = parse_alpha(alpha)
    n_max = 200_000
    br = cf.bracket(n_max)
    yield "floor_table n=2e5", (*br, n_max)
    floors, _ = kernels.floor_table(*br, n_max)
    yield "scan_weights 13x21 i<=1e5", (floors, 13, 21, 100_000, 0, None)
    pts = points_of_alpha(cf, 120)
    U, V, W, ((du, dv),), brp = pts._raw(frac_mul(cf, 89))
    yield "oracle_counts m=120", (U, V, W, du, dv, brp)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--alpha", default="golden")
    args = ap.parse_args()
    print(f"compiled implementation: {kernels.IMPLEMENTATION}")
    print(f"{'kernel':<28}{'compiled s':>12}{'python s':>12}{'speedup':>10}")
    for label, argv in cases(args.alpha):
        name = label.split()[0]
        tc, rc = best_of(args.repeat, getattr(kernels, name), *argv)
        tp, rp = best_of(args.repeat, getattr(py, name), *argv)
        if not same(rc, rp):
            raise SystemExit(f"{label}: implementations disagree")
        print(f"{label:<28}{tc:>12.4f}{tp:>12.4f}{tp / tc:>9.1f}x")


if __name__ == "__main__":
    main()
