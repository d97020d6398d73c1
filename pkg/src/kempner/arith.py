"""Exact integer arithmetic: factorization, radicals, and the beta function.

beta(b) is the largest integer below b whose radical divides b, equivalently
the largest integer below b that divides some power of b. It drives both the
closed form ell(b) = (b-1)*beta(b) and the extremal progression construction.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import _kernels as kernels
from ._smooth import largest_smooth_below
from .errors import CapacityError, DomainError

# Trial division by primes below 10**6 factors anything up to 10**12.
FACTOR_LIMIT = 10**12
_SIEVE_BOUND = 10**6

# Window scans stay within machine-width arithmetic; the block kernel needs
# intermediate products below hi**2, so the configurable cap tops out at 10**9.
BULK_RANGE_LIMIT = 10**7
_BULK_HARD_LIMIT = 10**9
_BULK_BLOCK = 1 << 16

Factorization = list[tuple[int, int]]

_prime_cache: dict[int, np.ndarray] = {}


def primes_up_to(n: int) -> np.ndarray:
    """Ascending primes <= n as an int64 array (cached)."""
    if n < 2:
        return np.empty(0, np.int64)
    for bound, arr in _prime_cache.items():
        if bound >= n:
            return arr[: np.searchsorted(arr, n, side="right")]
    sieve = np.ones(n + 1, bool)
    sieve[:2] = False
    for i in range(2, math.isqrt(n) + 1):
        if sieve[i]:
            sieve[i * i :: i] = False
    arr = np.flatnonzero(sieve).astype(np.int64)
    _prime_cache.clear()
    _prime_cache[n] = arr
    return arr


def factorize(n: int, *, limit: int = FACTOR_LIMIT) -> Factorization:
    """Prime factorization as ascending (prime, exponent) pairs; 1 -> []."""
    if n < 1:
        raise DomainError(f"factorize requires n >= 1, got {n}")
    if n > limit:
        raise CapacityError(f"factorize supports n up to {limit}, got {n}")
    out: Factorization = []
    rem = n
    for p in primes_up_to(min(_SIEVE_BOUND, math.isqrt(n) + 1)):
        p = int(p)
        if p * p > rem:
            break
        if rem % p == 0:
            e = 0
            while rem % p == 0:
                rem //= p
                e += 1
            out.append((p, e))
    if rem > 1:
        out.append((rem, 1))
    return out


def radical(n: int, *, limit: int = FACTOR_LIMIT) -> int:
    """Product of the distinct primes dividing n; radical(1) = 1."""
    if n < 1:
        raise DomainError(f"radical requires n >= 1, got {n}")
    return math.prod(p for p, _ in factorize(n, limit=limit))


def is_prime_power(n: int, *, limit: int = FACTOR_LIMIT) -> Optional[tuple[int, int]]:
    """(p, k) if n = p**k for a prime p and k >= 1, else None."""
    if n < 2:
        raise DomainError(f"prime-power test requires n >= 2, got {n}")
    fac = factorize(n, limit=limit)
    if len(fac) == 1:
        return fac[0]
    return None


@dataclass(frozen=True)
class BetaResult:
    """beta(b) with its exponent decomposition over the primes of b.

    K is the least exponent with beta dividing b**K; the extremal
    progression uses difference b**K // beta.
    """

    b: int
    beta: int
    exponents: tuple[tuple[int, int], ...]
    K: int


def beta(b: int) -> BetaResult:
    """Largest integer below b whose radical divides b, with its witnesses.

    Exact integer products and comparisons throughout; floating logs could
    misrank near-ties between smooth numbers.
    """
    if b < 2:
        raise DomainError(f"beta requires b >= 2, got {b}")
    fac = factorize(b)
    primes = [p for p, _ in fac]
    value = largest_smooth_below(b, primes)
    exps = []
    rem = value
    for p in primes:
        a = 0
        while rem % p == 0:
            rem //= p
            a += 1
        exps.append((p, a))
    k = max((-(-a // e) for (p, e), (_, a) in zip(fac, exps)), default=0)
    return BetaResult(b, value, tuple(exps), max(1, k))


def ell(b: int) -> int:
    """Length of the longest arithmetic progression omitting some base-b digit."""
    return (b - 1) * beta(b).beta


def bulk_beta_values(lo: int, hi: int, *, range_limit: int = BULK_RANGE_LIMIT) -> np.ndarray:
    """beta(n) for n in [lo, hi] as an int64 array, via windowed sieving."""
    if range_limit > _BULK_HARD_LIMIT:
        raise DomainError(f"range limit cannot exceed {_BULK_HARD_LIMIT}")
    if lo < 2 or lo > hi:
        raise DomainError(f"need 2 <= lo <= hi, got lo={lo} hi={hi}")
    if hi > range_limit:
        raise CapacityError(f"bulk beta supports hi up to {range_limit}, got {hi}")
    primes = primes_up_to(max(2, math.isqrt(hi)))
    parts = []
    a = lo
    while a <= hi:
        count = min(_BULK_BLOCK, hi - a + 1)
        parts.append(kernels.beta_block(a, count, primes))
        a += count
    return np.concatenate(parts) if len(parts) > 1 else parts[0]


def bulk_beta(lo: int, hi: int, *, range_limit: int = BULK_RANGE_LIMIT) -> list[tuple[int, int]]:
    """(n, beta(n)) pairs for every n in [lo, hi]."""
    vals = bulk_beta_values(lo, hi, range_limit=range_limit)
    return [(lo + i, int(v)) for i, v in enumerate(vals)]
