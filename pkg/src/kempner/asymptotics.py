"""Empirical behaviour of beta(n)/n: window statistics and density scans.

beta(n)/n swings between near 0 (primes) and near 1 (n = 2**k + 2), yet
along arithmetic progressions whose modulus has two distinct prime factors
the ratio drifts toward 1. The density experiments count, per dyadic block,
the integers with at least two distinct prime factors below a slowly
growing threshold; that set carries the drift and has natural density 1.
All ratios are exact rationals: comparisons never go through floats.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

import numpy as np

from .arith import (
    BULK_RANGE_LIMIT,
    beta,
    bulk_beta_values,
    factorize,
    is_prime_power,
    primes_up_to,
)
from .errors import CapacityError, DomainError

__all__ = [
    "DensitySetConfig",
    "DensityReport",
    "DyadicBlock",
    "DensityScan",
    "GROWTH_FUNCTIONS",
    "default_config",
    "ratio_report",
    "is_prime_power",
    "density_set_membership",
    "density_scan",
    "witnesses",
    "power_ratios",
]


def _ceil_log2(x: int) -> int:
    return (x - 1).bit_length()


def _f_log2(n: int) -> int:
    return _ceil_log2(n + 2)


def _f_sixthroot(n: int) -> int:
    r = round(n ** (1 / 6))
    while r**6 > n:
        r -= 1
    while (r + 1) ** 6 <= n:
        r += 1
    return r if r**6 == n else r + 1


def _f_expsqrt(n: int) -> int:
    return math.ceil(math.exp(math.sqrt(math.log(n)))) if n > 1 else 1


@dataclass(frozen=True)
class DensitySetConfig:
    """Named nondecreasing threshold function used by the density set."""

    name: str
    f: Callable[[int], int]


GROWTH_FUNCTIONS = {
    "log2": DensitySetConfig("log2", _f_log2),
    "sixthroot": DensitySetConfig("sixthroot", _f_sixthroot),
    "expsqrt": DensitySetConfig("expsqrt", _f_expsqrt),
}

default_config = GROWTH_FUNCTIONS["log2"]


@dataclass(frozen=True)
class DensityReport:
    """Exact statistics of beta(n)/n over a window (lo, hi].

    modulus 0 means no residue restriction; otherwise only multiples of
    modulus are counted. Ratios are exact Fractions; the histogram buckets
    [0, 1) uniformly.
    """

    lo: int
    hi: int
    modulus: int
    count: int
    min_ratio: Fraction
    min_at: int
    mean_ratio: Fraction
    buckets: int
    histogram: tuple[int, ...]


def _exact_mean(betas: np.ndarray, ns: np.ndarray) -> Fraction:
    # Common-denominator accumulation; summing reduced Fractions pairwise
    # would re-run gcd on ever larger denominators.
    lcm = 1
    for n in ns:
        n = int(n)
        lcm = lcm * (n // math.gcd(lcm, n))
    total = 0
    for b, n in zip(betas, ns):
        total += int(b) * (lcm // int(n))
    return Fraction(total, lcm * len(ns))


def ratio_report(
    lo: int,
    hi: int,
    modulus: int = 0,
    buckets: int = 20,
    *,
    range_limit: int = BULK_RANGE_LIMIT,
) -> DensityReport:
    """Exact min, mean, and histogram of beta(n)/n over n in (lo, hi]."""
    if lo < 2 or lo >= hi:
        raise DomainError(f"need 2 <= lo < hi, got lo={lo} hi={hi}")
    if modulus < 0:
        raise DomainError(f"modulus must be non-negative, got {modulus}")
    if not 1 <= buckets <= 10**6:
        raise DomainError("buckets must lie in [1, 10**6]")
    betas = bulk_beta_values(lo + 1, hi, range_limit=range_limit)
    ns = np.arange(lo + 1, hi + 1, dtype=np.int64)
    if modulus:
        keep = ns % modulus == 0
        ns = ns[keep]
        betas = betas[keep]
    if ns.size == 0:
        raise DomainError(f"window ({lo}, {hi}] holds no multiples of {modulus}")
    best_i = 0
    for i in range(1, ns.size):
        # exact comparison beta[i]/n[i] < beta[best]/n[best]
        if int(betas[i]) * int(ns[best_i]) < int(betas[best_i]) * int(ns[i]):
            best_i = i
    hist = np.bincount(betas * buckets // ns, minlength=buckets)
    return DensityReport(
        lo=lo,
        hi=hi,
        modulus=modulus,
        count=int(ns.size),
        min_ratio=Fraction(int(betas[best_i]), int(ns[best_i])),
        min_at=int(ns[best_i]),
        mean_ratio=_exact_mean(betas, ns),
        buckets=buckets,
        histogram=tuple(int(c) for c in hist),
    )


def power_ratios(m: int, t_max: int) -> list[tuple[int, int, Fraction]]:
    """(m**t, beta(m**t), ratio) for t = 1 .. t_max.

    Along prime-power rays the ratio is pinned (e.g. exactly 1/2 on powers
    of 4), the obstruction that keeps beta(n)/n from converging on all of
    m*Z when m is a prime power.
    """
    if m < 2:
        raise DomainError(f"need m >= 2, got {m}")
    if t_max < 1:
        raise DomainError(f"need t_max >= 1, got {t_max}")
    out = []
    for t in range(1, t_max + 1):
        n = m**t
        bv = beta(n).beta
        out.append((n, bv, Fraction(bv, n)))
    return out


def density_set_membership(n: int, cfg: DensitySetConfig = default_config) -> bool:
    """Whether n has two distinct prime factors below its dyadic threshold.

    The threshold for n in (2**(j-1), 2**j] is cfg.f(2**(j-1)).
    """
    if n < 2:
        raise DomainError(f"membership requires n >= 2, got {n}")
    j = (n - 1).bit_length()
    t = cfg.f(1 << (j - 1))
    small = sum(1 for p, _ in factorize(n) if p <= t)
    return small >= 2


@dataclass(frozen=True)
class DyadicBlock:
    """Members of the density set within one dyadic block (lo, hi]."""

    j: int
    lo: int
    hi: int
    members: int
    width: int


@dataclass(frozen=True)
class DensityScan:
    """Exact density of the two-small-prime-factors set up to a limit."""

    limit: int
    f_name: str
    ratio: Fraction
    blocks: tuple[DyadicBlock, ...]


def density_scan(
    limit: int,
    cfg: DensitySetConfig = default_config,
    *,
    range_limit: int = BULK_RANGE_LIMIT,
) -> DensityScan:
    """Count density-set members in [1, limit], exactly, block by block.

    Within one block the threshold is constant, so members are counted by
    marking multiples of each small prime and keeping positions marked at
    least twice.
    """
    if limit < 1:
        raise DomainError(f"limit must be at least 1, got {limit}")
    if limit > range_limit:
        raise CapacityError(f"density scan supports limits up to {range_limit}, got {limit}")
    blocks = []
    total = 0
    j = 0
    while True:
        block_lo = 1 if j == 0 else (1 << (j - 1)) + 1
        if block_lo > limit:
            break
        block_hi = min(1 << j, limit)
        members = 0
        if j >= 1:
            t = cfg.f(1 << (j - 1))
            primes = [int(p) for p in primes_up_to(max(2, t)) if p <= t]
            if len(primes) >= 2:
                marks = np.zeros(block_hi - block_lo + 1, np.uint8)
                for p in primes:
                    first = ((block_lo + p - 1) // p) * p
                    marks[first - block_lo :: p] += 1
                members = int((marks >= 2).sum())
        blocks.append(DyadicBlock(j, block_lo, block_hi, members, block_hi - block_lo + 1))
        total += members
        j += 1
    return DensityScan(limit, cfg.name, Fraction(total, limit), tuple(blocks))


def _first_primes(count: int) -> list[int]:
    bound = 15
    if count > 5:
        n = count
        bound = int(n * (math.log(n) + math.log(math.log(n)))) + 10
    while True:
        ps = primes_up_to(bound)
        if ps.size >= count:
            return [int(p) for p in ps[:count]]
        bound *= 2


def witnesses(kind: str, count: int) -> list[tuple[int, int, Fraction]]:
    """Witness sequences for the extreme behaviour of beta(n)/n.

    "liminf": the first primes p, where beta(p) = 1 and the ratio is 1/p.
    "limsup": n = 2**k + 2 for k = 2 .. count+1, where beta(n) = 2**k.
    """
    if count < 1:
        raise DomainError(f"count must be at least 1, got {count}")
    if kind == "liminf":
        rows = []
        for p in _first_primes(count):
            bv = beta(p).beta
            rows.append((p, bv, Fraction(bv, p)))
        return rows
    if kind == "limsup":
        rows = []
        for k in range(2, count + 2):
            n = 2**k + 2
            bv = beta(n).beta
            rows.append((n, bv, Fraction(bv, n)))
        return rows
    raise DomainError(f"kind must be liminf or limsup, got {kind!r}")
