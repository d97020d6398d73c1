"""Construction of the extremal digit-omitting arithmetic progression.

For any base b, the progression 0, D, 2D, ..., with D = b**K / beta(b) and
K minimal such that beta(b) divides b**K, stays clear of the top digit b-1
for (b-1)*beta(b) consecutive terms. That length is exactly ell(b).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .arith import beta
from .digits import DigitSet, Progression
from .errors import DomainError


@dataclass(frozen=True)
class GcdCheck:
    """One digit position's separation condition gcd(b**(k+1), D) > b**k."""

    k: int
    gcd: int
    threshold: int

    @property
    def holds(self) -> bool:
        return self.gcd > self.threshold


@dataclass(frozen=True)
class ConstructionReport:
    """Why the constructed progression omits the top digit.

    checks covers positions k in [0, K-1]; the gcd condition forces the
    fractional part of term / b**(k+1) away from the top-digit interval.
    """

    b: int
    beta: int
    K: int
    difference: int
    length: int
    checks: tuple[GcdCheck, ...]

    def lines(self) -> list[str]:
        out = [
            f"base {self.b}: beta = {self.beta}, K = {self.K}, "
            f"difference {self.b}^{self.K}/{self.beta} = {self.difference}, "
            f"length ({self.b}-1)*{self.beta} = {self.length}"
        ]
        for c in self.checks:
            verdict = "ok" if c.holds else "FAILS"
            out.append(
                f"  k={c.k}: gcd({self.b}^{c.k + 1}, {self.difference}) = {c.gcd} > {c.threshold} {verdict}"
            )
        if not self.checks:
            out.append("  no digit positions to check (K = 1 with unit length or beta = 1)")
        return out


def max_progression(b: int) -> tuple[Progression, DigitSet]:
    """The length-ell(b) progression omitting digit b-1, with its digit set.

    Degenerates gracefully at b = 2 where the answer is the single term 0.
    """
    if b < 2:
        raise DomainError(f"base must be at least 2, got {b}")
    res = beta(b)
    difference = b**res.K // res.beta
    length = (b - 1) * res.beta
    digitset = DigitSet.excluding(b, b - 1)
    if length == 1:
        return Progression(0, 0, 1), digitset
    return Progression(0, difference, length), digitset


def explain_construction(b: int) -> ConstructionReport:
    """Machine-checked separation conditions behind max_progression."""
    if b < 2:
        raise DomainError(f"base must be at least 2, got {b}")
    res = beta(b)
    difference = b**res.K // res.beta
    length = (b - 1) * res.beta
    checks = tuple(
        GcdCheck(k, math.gcd(b ** (k + 1), difference), b**k) for k in range(res.K)
    )
    if length == 1:
        checks = ()
    return ConstructionReport(b, res.beta, res.K, difference, length, checks)
