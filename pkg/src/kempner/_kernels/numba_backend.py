"""Numba-compiled hot kernels: membership bitmaps, run scans, window beta."""

from __future__ import annotations

import os

# The TBB probe warns on older TBB builds; workqueue is always available
# and keeps thread counts deterministic under set_num_threads.
os.environ.setdefault("NUMBA_THREADING_LAYER", "workqueue")

import numba
import numpy as np
from numba import njit, prange

NAME = "numba"


def set_threads(n: int) -> None:
    numba.set_num_threads(max(1, min(n, numba.config.NUMBA_NUM_THREADS)))


@njit(cache=True)
def membership_bitmap(allowed, base, n):
    """bitmap[i] = 1 iff every base-b digit of i is allowed.

    Single-digit values use only their own digit; larger values reuse the
    already-computed verdict of their digit-truncated prefix i // base.
    """
    out = np.empty(n, np.uint8)
    out[0] = allowed[0]
    top = base if base < n else n
    for i in range(1, top):
        out[i] = allowed[i % base]
    for i in range(top, n):
        out[i] = allowed[i % base] & out[i // base]
    return out


@njit(cache=True)
def best_run(member, delta):
    """(length, start) of the longest 1-run along stride delta.

    Ties resolve to the smallest start. Returns (0, -1) when no member
    is set.
    """
    n = member.size
    best = 0
    best_start = -1
    for r in range(delta):
        run = 0
        for j in range(r, n, delta):
            if member[j]:
                run += 1
                if run > best:
                    best = run
                    best_start = j - (run - 1) * delta
                elif run == best:
                    s = j - (run - 1) * delta
                    if s < best_start:
                        best_start = s
            else:
                run = 0
    return best, best_start


@njit(cache=True, parallel=True)
def sweep_runs(member, max_diff, skip_multiples_of):
    """Per-difference best runs for every delta in [1, max_diff].

    Differences divisible by skip_multiples_of (when > 1) are left at
    length 0. Results are per-delta, so the outcome is independent of
    the parallel partitioning.
    """
    lens = np.zeros(max_diff + 1, np.int64)
    starts = np.full(max_diff + 1, -1, np.int64)
    for d in prange(1, max_diff + 1):
        if skip_multiples_of > 1 and d % skip_multiples_of == 0:
            continue
        length, start = best_run(member, d)
        lens[d] = length
        starts[d] = start
    return lens, starts


@njit(cache=True)
def beta_block(lo, count, primes):
    """beta(n) for n in [lo, lo+count) by sieved factorization plus DFS.

    Requires primes to cover isqrt(lo+count-1) and lo+count-1 <= 10**9
    so every partial product fits in int64.
    """
    hi = lo + count - 1
    rem = np.empty(count, np.int64)
    for i in range(count):
        rem[i] = lo + i
    nfac = np.zeros(count, np.int8)
    fac = np.zeros((count, 10), np.int64)
    for pi in range(primes.size):
        p = primes[pi]
        if p * p > hi:
            break
        first = ((lo + p - 1) // p) * p
        for m in range(first, hi + 1, p):
            i = m - lo
            fac[i, nfac[i]] = p
            nfac[i] += 1
            while rem[i] % p == 0:
                rem[i] //= p
    out = np.empty(count, np.int64)
    stack_level = np.empty(256, np.int64)
    stack_prod = np.empty(256, np.int64)
    for i in range(count):
        if rem[i] > 1:
            fac[i, nfac[i]] = rem[i]
            nfac[i] += 1
        n = lo + i
        k = nfac[i]
        best = 1
        sp = 1
        stack_level[0] = 0
        stack_prod[0] = 1
        while sp > 0:
            sp -= 1
            level = stack_level[sp]
            prod = stack_prod[sp]
            if level == k:
                if prod > best:
                    best = prod
            else:
                p = fac[i, level]
                q = prod
                while q < n:
                    stack_level[sp] = level + 1
                    stack_prod[sp] = q
                    sp += 1
                    q *= p
        out[i] = best
    return out
