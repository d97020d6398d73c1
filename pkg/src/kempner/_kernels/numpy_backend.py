"""Pure-numpy fallbacks for the hot kernels, selected via KEMPNER_BACKEND.

Same contracts and tie-breaks as the numba backend, vectorized where numpy
allows and plain Python where it does not (the per-n exponent search).
"""

from __future__ import annotations

import numpy as np

from .._smooth import largest_smooth_below

NAME = "numpy"


def set_threads(n: int) -> None:
    # Single-threaded backend; accepted for interface parity.
    pass


def membership_bitmap(allowed, base, n):
    """bitmap[i] = 1 iff every base-b digit of i is allowed.

    Filled in digit-count blocks [b**k, b**(k+1)): each block only reads
    verdicts of shorter numbers, so vectorized assignment is safe.
    """
    allowed = np.asarray(allowed, np.uint8)
    out = np.empty(n, np.uint8)
    out[0] = allowed[0]
    lo = 1
    while lo < n:
        hi = min(n, lo * base)
        idx = np.arange(lo, hi)
        if lo < base:
            out[lo:hi] = allowed[idx]
        else:
            out[lo:hi] = allowed[idx % base] & out[idx // base]
        lo = hi
    return out


def best_run(member, delta):
    """(length, start) of the longest 1-run along stride delta, smallest start."""
    n = member.size
    rows = (n + delta - 1) // delta
    padded = np.zeros(rows * delta, np.int64)
    padded[:n] = member
    grid = padded.reshape(rows, delta)
    run = np.zeros(delta, np.int64)
    run_start_row = np.zeros(delta, np.int64)
    best = np.zeros(delta, np.int64)
    best_row = np.zeros(delta, np.int64)
    for j in range(rows):
        row = grid[j]
        starting = (run == 0) & (row == 1)
        run_start_row[starting] = j
        run = (run + row) * row
        improved = run > best
        best[improved] = run[improved]
        best_row[improved] = run_start_row[improved]
    length = int(best.max()) if delta else 0
    if length == 0:
        return 0, -1
    cols = np.flatnonzero(best == length)
    starts = best_row[cols] * delta + cols
    return length, int(starts.min())


def sweep_runs(member, max_diff, skip_multiples_of):
    """Per-difference best runs for every delta in [1, max_diff]."""
    lens = np.zeros(max_diff + 1, np.int64)
    starts = np.full(max_diff + 1, -1, np.int64)
    for d in range(1, max_diff + 1):
        if skip_multiples_of > 1 and d % skip_multiples_of == 0:
            continue
        lens[d], starts[d] = best_run(member, d)
    return lens, starts


def beta_block(lo, count, primes):
    """beta(n) for n in [lo, lo+count): vectorized sieve, Python DFS per n."""
    hi = lo + count - 1
    rem = np.arange(lo, lo + count, dtype=np.int64)
    factors: list[list[int]] = [[] for _ in range(count)]
    for p in primes:
        p = int(p)
        if p * p > hi:
            break
        first = ((lo + p - 1) // p) * p
        idx = np.arange(first - lo, count, p)
        if idx.size == 0:
            continue
        for i in idx:
            factors[i].append(p)
        sub = rem[idx]
        while True:
            div = sub % p == 0
            if not div.any():
                break
            sub[div] //= p
        rem[idx] = sub
    out = np.empty(count, np.int64)
    for i in range(count):
        ps = factors[i]
        r = int(rem[i])
        if r > 1:
            ps = ps + [r]
        out[i] = largest_smooth_below(lo + i, ps)
    return out
