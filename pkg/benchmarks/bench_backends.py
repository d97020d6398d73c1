#!/usr/bin/env python3
"""Benchmark the numba kernels against the pure-numpy fallbacks.

Runs the three hot kernels on identical inputs through both backends and
prints per-kernel timings with the speedup ratio. Results are asserted
equal before timing, so the comparison is also a consistency check.
"""

import argparse
import time

import numpy as np

from kempner._kernels import numpy_backend
from kempner.arith import primes_up_to

try:
    from kempner._kernels import numba_backend
except ImportError:
    numba_backend = None


def time_call(fn, *args, repeats=3):
    best = float("inf")
    result = None
    for _ in range(repeats):
        t0 = time.perf_counter()
        result = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best, result


def row(name, numpy_s, numba_s):
    if numba_s is None:
        print(f"{name:<28} numpy {numpy_s * 1e3:9.2f} ms   numba       n/a")
    else:
        print(
            f"{name:<28} numpy {numpy_s * 1e3:9.2f} ms   "
            f"numba {numba_s * 1e3:9.2f} ms   x{numpy_s / numba_s:6.1f}"
        )


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--window", type=int, default=10**5)
    ap.add_argument("--max-diff", type=int, default=2000)
    ap.add_argument("--bulk", type=int, default=2 * 10**5, help="bulk beta window width")
    ap.add_argument("--base", type=int, default=10)
    ap.add_argument("--repeats", type=int, default=3)
    args = ap.parse_args()

    allowed = np.ones(args.base, np.uint8)
    allowed[args.base - 1] = 0

    if numba_backend is not None:
        # warm the JIT outside the timed region
        m = numba_backend.membership_bitmap(allowed, args.base, 1000)
        numba_backend.sweep_runs(m, 50, args.base)
        numba_backend.beta_block(2, 64, primes_up_to(64))

    print(f"window={args.window} max_diff={args.max_diff} base={args.base} bulk={args.bulk}")

    t_np, member_np = time_call(
        numpy_backend.membership_bitmap, allowed, args.base, args.window, repeats=args.repeats
    )
    t_nb = None
    if numba_backend is not None:
        t_nb, member_nb = time_call(
            numba_backend.membership_bitmap, allowed, args.base, args.window, repeats=args.repeats
        )
        assert np.array_equal(member_np, member_nb)
    row("membership_bitmap", t_np, t_nb)

    t_np, runs_np = time_call(
        numpy_backend.sweep_runs, member_np, args.max_diff, args.base, repeats=args.repeats
    )
    t_nb = None
    if numba_backend is not None:
        t_nb, runs_nb = time_call(
            numba_backend.sweep_runs, member_np, args.max_diff, args.base, repeats=args.repeats
        )
        assert np.array_equal(runs_np[0], runs_nb[0]) and np.array_equal(runs_np[1], runs_nb[1])
    row("sweep_runs", t_np, t_nb)

    lo = 10**6
    primes = primes_up_to(int((lo + args.bulk) ** 0.5) + 1)
    t_np, beta_np = time_call(numpy_backend.beta_block, lo, args.bulk, primes, repeats=1)
    t_nb = None
    if numba_backend is not None:
        t_nb, beta_nb = time_call(
            numba_backend.beta_block, lo, args.bulk, primes, repeats=args.repeats
        )
        assert np.array_equal(beta_np, beta_nb)
    row(f"beta_block [{lo}, +{args.bulk})", t_np, t_nb)


if __name__ == "__main__":
    main()
