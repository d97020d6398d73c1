"""Upper bounds on digit-omitting progressions, including per-difference certificates.

The certificate for a difference D tracks, per digit position k, the order
lambda_k of (D mod b**(k+1)) / b**(k+1) in R/Z. While lambda_k < b the
position cannot force every digit to appear; at the first k with
lambda_k >= b the orbit is equally spaced finely enough that any run of
terms avoiding one digit has length at most lambda_k - floor(lambda_k / b).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from .arith import is_prime_power
from .errors import DomainError


@dataclass(frozen=True)
class CertificateRow:
    """Order data for one digit position of the difference."""

    k: int
    delta_k: int      # difference truncated to its k+1 lowest digits
    lambda_k: int     # order of delta_k / b**(k+1) in R/Z
    mu_k: int         # numerator: lambda_k * delta_k == mu_k * b**(k+1)
    c2_holds: bool    # lambda_k <= b-1, so this position forces nothing yet


@dataclass(frozen=True)
class DifferenceCertificate:
    """Checkable upper bound on run lengths for one common difference.

    bound caps the length of any arithmetic progression with this
    difference inside any proper Kempner set of base b (all permitted
    sets contain the digit 0). Differences divisible by b are reduced
    first; deleting the rightmost digit maps such progressions to ones
    with difference delta/b and equal length.
    """

    b: int
    delta: int
    reduced_delta: int
    power_removed: int
    rows: tuple[CertificateRow, ...]
    bound: int
    first_break_k: int


def trivial_bound(b: int) -> int:
    """Interval-confinement bound b**2 - b, valid for every base."""
    if b < 2:
        raise DomainError(f"base must be at least 2, got {b}")
    return b * b - b


def prime_power_bound(b: int) -> Optional[int]:
    """p**(k-1) * (b - 1) when b = p**k, matching (b-1)*beta(b); else None."""
    if b < 2:
        raise DomainError(f"base must be at least 2, got {b}")
    pk = is_prime_power(b)
    if pk is None:
        return None
    p, k = pk
    return p ** (k - 1) * (b - 1)


def normalize_difference(delta: int, b: int) -> tuple[int, int]:
    """Divide out the largest power of b, returning (reduced, exponent removed)."""
    if b < 2:
        raise DomainError(f"base must be at least 2, got {b}")
    if delta < 1:
        raise DomainError(f"difference must be positive, got {delta}")
    power = 0
    while delta % b == 0:
        delta //= b
        power += 1
    return delta, power


def difference_certificate(delta: int, b: int) -> DifferenceCertificate:
    """Certificate rows for k = 0 .. first break, with the induced bound.

    lambda_k is computed as b**(k+1) / gcd(delta_k, b**(k+1)), which equals
    the order of delta_k / b**(k+1) in R/Z. Successive lambda values divide
    b times the previous one, so the first k with lambda_k >= b yields the
    minimal bound.
    """
    if b < 2:
        raise DomainError(f"base must be at least 2, got {b}")
    if delta < 1:
        raise DomainError(f"difference must be positive, got {delta}")
    reduced, power = normalize_difference(delta, b)
    rows = []
    k = 0
    while True:
        modulus = b ** (k + 1)
        delta_k = reduced % modulus
        g = math.gcd(delta_k, modulus)
        lam = modulus // g
        mu = delta_k // g
        rows.append(CertificateRow(k, delta_k, lam, mu, lam <= b - 1))
        if lam >= b:
            return DifferenceCertificate(
                b, delta, reduced, power, tuple(rows), lam - lam // b, k
            )
        k += 1
