import pytest

from kempner.arith import ell
from kempner.digits import DigitSet, Progression, is_member, verify_progression
from kempner.errors import CapacityError, DomainError
from kempner.search import (
    SearchSpec,
    coverage_policy,
    longest_ap_base,
    longest_ap_in_window,
    longest_run_for_difference,
)


def brute_longest(s: DigitSet, window: int, max_diff: int):
    """Quadratic oracle: try every (start, diff) pair directly."""
    members = [is_member(n, s) for n in range(window)]
    best = (1, 0, next(i for i in range(window) if members[i]))
    for diff in range(1, max_diff + 1):
        for start in range(window):
            if not members[start]:
                continue
            length = 1
            while start + length * diff < window and members[start + length * diff]:
                length += 1
            if length > best[0]:
                best = (length, diff, start)
    return best


def test_in_window_examples():
    p = longest_ap_in_window(DigitSet.excluding(10, 9), 10**4, 10**3)
    assert p == Progression(0, 125, 72)

    p = longest_ap_in_window(DigitSet.from_digits(3, [0, 1]), 243, 27)
    assert p.length == 2
    assert p == Progression(0, 1, 2)

    p = longest_ap_in_window(DigitSet.from_digits(2, [0]), 32, 8)
    assert p == Progression(0, 0, 1)


def test_in_window_matches_brute_oracle():
    cases = [
        (DigitSet.from_digits(3, [0, 1]), 200, 30),
        (DigitSet.excluding(4, 2), 300, 40),
        (DigitSet.from_digits(5, [0, 1, 3]), 250, 50),
        (DigitSet.excluding(6, 5), 400, 60),
    ]
    for s, window, max_diff in cases:
        p = longest_ap_in_window(s, window, max_diff)
        length, _, _ = brute_longest(s, window, max_diff)
        assert p.length == length
        assert verify_progression(p, s) is None
        assert p.last < window


def test_skip_base_multiples_is_lossless():
    for s, window, max_diff in [
        (DigitSet.excluding(4, 3), 500, 60),
        (DigitSet.excluding(5, 2), 500, 80),
        (DigitSet.from_digits(6, [0, 2, 4, 5]), 600, 90),
    ]:
        fast = longest_ap_in_window(s, window, max_diff, skip_base_multiples=True)
        audit = longest_ap_in_window(s, window, max_diff, skip_base_multiples=False)
        assert fast == audit


def test_base_examples():
    r = longest_ap_base(4, 256, 64)
    assert r.best == Progression(0, 2, 6)
    assert r.excluded_digit == 3
    assert r.exhaustive

    r = longest_ap_base(5, 625, 125)
    assert r.best.length == 4

    r = longest_ap_base(10, 10**4, 10**3)
    assert r.best == Progression(0, 125, 72)
    assert r.excluded_digit == 9
    assert not r.exhaustive  # policy for base 10 wants a 10**5 window


def test_base_single_digit_restriction():
    r = longest_ap_base(10, 10**4, 10**3, excluded=8)
    assert r.excluded_digit == 8
    assert r.best.length == 64
    assert verify_progression(r.best, DigitSet.excluding(10, 8)) is None


def test_never_exceeds_exact_value():
    for b in range(2, 11):
        window, max_diff = coverage_policy(b)
        if window > 10**4:
            window, max_diff = 10**4, 10**3
        r = longest_ap_base(b, window, max_diff)
        assert r.best.length <= ell(b)


def test_longest_run_examples():
    assert longest_run_for_difference(125, 9, 10, 10**4) == 72
    assert longest_run_for_difference(5, 9, 10, 10**3) == 18
    assert longest_run_for_difference(1, 0, 10, 10**3) == 9


def test_spec_validation():
    with pytest.raises(DomainError):
        SearchSpec(1, 100, 10)
    with pytest.raises(DomainError):
        SearchSpec(10, 1, 1)
    with pytest.raises(DomainError):
        SearchSpec(10, 100, 100)
    with pytest.raises(DomainError):
        SearchSpec(10, 100, 10, excluded_digit=0)  # digit 0 is always permitted
    with pytest.raises(DomainError):
        longest_ap_in_window(DigitSet.from_digits(4, range(4)), 100, 10)  # improper
    with pytest.raises(DomainError):
        longest_run_for_difference(100, 1, 10, 50)


def test_budget_capacity():
    with pytest.raises(CapacityError):
        longest_ap_in_window(DigitSet.excluding(10, 9), 10**4, 10**3, budget=10**5)
    with pytest.raises(CapacityError):
        longest_ap_base(10, 10**4, 10**3, budget=10**6)


def test_coverage_policy_values():
    assert coverage_policy(10) == (10**5, 10**4)
    assert coverage_policy(4) == (64, 16)
    assert coverage_policy(2) == (8, 4)
