"""Brute-force oracles for the longest digit-omitting arithmetic progressions.

These scans are independent of the closed form and the construction: they
build a membership bitmap over a window [0, N) and measure runs along every
stride. They validate the exact formula and every certificate bound, and
can only undershoot when the window is too small, never overshoot.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import _kernels as kernels
from .arith import beta
from .digits import DigitSet, Progression
from .errors import CapacityError, DomainError

DEFAULT_BUDGET = 10**9


@dataclass(frozen=True)
class SearchSpec:
    """Window parameters for a base-wide search."""

    base: int
    window: int
    max_difference: int
    excluded_digit: Optional[int] = None  # None sweeps every proper single exclusion

    def __post_init__(self) -> None:
        if self.base < 2:
            raise DomainError(f"base must be at least 2, got {self.base}")
        if self.window < 2:
            raise DomainError(f"window must be at least 2, got {self.window}")
        if not 1 <= self.max_difference < self.window:
            raise DomainError("need 1 <= max_difference < window")
        if self.excluded_digit is not None and not 1 <= self.excluded_digit < self.base:
            raise DomainError(
                "excluded digit must lie in [1, base-1]; digit 0 is always permitted"
            )


@dataclass(frozen=True)
class SearchResult:
    """Best progression found, the digit it omits, and the coverage flag.

    exhaustive is a heuristic label: the window policy N >= b**(K+2),
    max_difference >= b**(K+1) is motivated by the descent and confinement
    arguments but not proven sufficient. Lengths reported are always exact
    for the scanned window.
    """

    best: Progression
    excluded_digit: int
    exhaustive: bool


def coverage_policy(b: int) -> tuple[int, int]:
    """(window, max_difference) under which the known extremum is in range."""
    k = beta(b).K
    return b ** (k + 2), b ** (k + 1)


def _allowed_lookup(s: DigitSet) -> np.ndarray:
    lut = np.zeros(s.base, np.uint8)
    for d in s.permitted:
        lut[d] = 1
    return lut


def _avoid_lookup(base: int, digit: int) -> np.ndarray:
    lut = np.ones(base, np.uint8)
    lut[digit] = 0
    return lut


def _delta_count(max_diff: int, skip: int) -> int:
    return max_diff - (max_diff // skip if skip > 1 else 0)


def _scan(member: np.ndarray, max_diff: int, skip: int) -> tuple[int, int, int]:
    """(length, difference, start) with ties to smallest difference then start."""
    lens, starts = kernels.sweep_runs(member, max_diff, skip)
    d = int(np.argmax(lens))  # first maximum: smallest difference
    return int(lens[d]), d, int(starts[d])


def _as_progression(length: int, difference: int, start: int) -> Progression:
    if length <= 1:
        return Progression(start, 0, 1)
    return Progression(start, difference, length)


def longest_ap_in_window(
    s: DigitSet,
    window: int,
    max_diff: int,
    *,
    skip_base_multiples: bool = True,
    budget: int = DEFAULT_BUDGET,
) -> Progression:
    """Longest progression inside the Kempner set restricted to [0, window).

    Ties break to the smallest difference, then the smallest start. With
    skip_base_multiples, differences divisible by the base are skipped:
    deleting the rightmost digit maps any such progression to an equally
    long one with difference delta/base, so the minimal-difference winner
    is never a base multiple.
    """
    if not s.proper:
        raise DomainError("search requires a proper digit set (some digit excluded)")
    if window < 2:
        raise DomainError(f"window must be at least 2, got {window}")
    if not 1 <= max_diff < window:
        raise DomainError("need 1 <= max_diff < window")
    skip = s.base if skip_base_multiples else 0
    steps = window * _delta_count(max_diff, skip)
    if steps > budget:
        raise CapacityError(
            f"search needs ~{steps} steps, over the budget of {budget}"
        )
    member = kernels.membership_bitmap(_allowed_lookup(s), s.base, window)
    length, difference, start = _scan(member, max_diff, skip)
    return _as_progression(length, difference, start)


def longest_ap_base(
    b: int,
    window: int,
    max_diff: int,
    *,
    excluded: Optional[int] = None,
    skip_base_multiples: bool = True,
    budget: int = DEFAULT_BUDGET,
) -> SearchResult:
    """Best progression over every single-digit-excluded Kempner set of base b.

    Proper permitted sets all contain digit 0, so the sweep runs over
    excluded digits 1 .. b-1 (or just the requested one). Ties across
    digit sets resolve by the progression tie-break, then the smaller
    excluded digit.
    """
    spec = SearchSpec(b, window, max_diff, excluded)
    digits = [spec.excluded_digit] if spec.excluded_digit is not None else list(range(1, b))
    skip = b if skip_base_multiples else 0
    steps = len(digits) * window * _delta_count(max_diff, skip)
    if steps > budget:
        raise CapacityError(
            f"search needs ~{steps} steps, over the budget of {budget}"
        )
    best_key = None
    for digit in digits:
        member = kernels.membership_bitmap(_avoid_lookup(b, digit), b, window)
        length, difference, start = _scan(member, max_diff, skip)
        if length <= 1:
            difference = 0
        key = (-length, difference, start, digit)
        if best_key is None or key < best_key:
            best_key = key
    length, difference, start, digit = -best_key[0], best_key[1], best_key[2], best_key[3]
    w, md = coverage_policy(b)
    return SearchResult(
        best=_as_progression(length, difference, start),
        excluded_digit=digit,
        exhaustive=window >= w and max_diff >= md,
    )


def run_search(spec: SearchSpec, **kwargs) -> SearchResult:
    return longest_ap_base(
        spec.base, spec.window, spec.max_difference, excluded=spec.excluded_digit, **kwargs
    )


def longest_run_for_difference(delta: int, digit: int, b: int, window: int) -> int:
    """Longest run of terms x + j*delta inside [0, window) avoiding one digit.

    Unlike the digit-set searches this accepts digit 0, measuring runs of
    integers whose written expansion omits 0; note that certificates only
    bound runs for digits >= 1 (leading zeros are not written digits).
    """
    if b < 2:
        raise DomainError(f"base must be at least 2, got {b}")
    if not 0 <= digit < b:
        raise DomainError(f"digit {digit} out of range for base {b}")
    if window < 2:
        raise DomainError(f"window must be at least 2, got {window}")
    if not 1 <= delta < window:
        raise DomainError("need 1 <= delta < window")
    member = kernels.membership_bitmap(_avoid_lookup(b, digit), b, window)
    length, _ = kernels.best_run(member, delta)
    return length
