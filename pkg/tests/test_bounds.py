import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kempner.arith import beta, ell
from kempner.bounds import (
    difference_certificate,
    normalize_difference,
    prime_power_bound,
    trivial_bound,
)
from kempner.errors import DomainError
from kempner.search import longest_run_for_difference


def test_trivial_bound():
    assert trivial_bound(10) == 90
    assert trivial_bound(2) == 2
    assert trivial_bound(24) == 552
    with pytest.raises(DomainError):
        trivial_bound(1)


def test_prime_power_bound():
    assert prime_power_bound(7) == 6
    assert prime_power_bound(9) == 24
    assert prime_power_bound(10) is None
    # on prime powers the bound coincides with the exact value
    for b in (2, 3, 4, 5, 8, 9, 16, 25, 27, 32, 81):
        assert prime_power_bound(b) == ell(b)


def test_normalize_difference():
    assert normalize_difference(1250, 10) == (125, 1)
    assert normalize_difference(125, 10) == (125, 0)
    assert normalize_difference(8, 2) == (1, 3)
    with pytest.raises(DomainError):
        normalize_difference(0, 10)


def test_certificate_examples():
    cert = difference_certificate(125, 10)
    assert [(r.lambda_k, r.mu_k) for r in cert.rows] == [(2, 1), (4, 1), (8, 1), (80, 1)]
    assert cert.bound == 72
    assert cert.first_break_k == 3

    cert = difference_certificate(1, 10)
    assert cert.rows[0].lambda_k == 10
    assert cert.bound == 9
    assert cert.first_break_k == 0

    cert = difference_certificate(5, 10)
    assert [r.lambda_k for r in cert.rows] == [2, 20]
    assert cert.bound == 18

    with pytest.raises(DomainError):
        difference_certificate(0, 10)


def test_certificate_normalizes_base_multiples():
    cert = difference_certificate(1250, 10)
    assert (cert.delta, cert.reduced_delta, cert.power_removed) == (1250, 125, 1)
    assert cert.bound == 72
    assert cert.rows == difference_certificate(125, 10).rows


@given(st.integers(1, 10**6), st.integers(2, 50))
@settings(max_examples=300)
def test_certificate_row_identities(delta, b):
    cert = difference_certificate(delta, b)
    reduced = cert.reduced_delta
    assert reduced % b != 0
    for r in cert.rows:
        assert r.delta_k == reduced % b ** (r.k + 1)
        assert r.lambda_k * r.delta_k == r.mu_k * b ** (r.k + 1)
        assert math.gcd(r.lambda_k, r.mu_k) == 1
        assert r.c2_holds == (r.lambda_k <= b - 1)
    # all rows before the break satisfy the coprime small-order condition
    assert all(r.c2_holds for r in cert.rows[:-1])
    assert not cert.rows[-1].c2_holds
    last = cert.rows[-1]
    assert cert.bound == last.lambda_k - last.lambda_k // b
    # divisor chain and termination
    for prev, cur in zip(cert.rows, cert.rows[1:]):
        assert (b * prev.lambda_k) % cur.lambda_k == 0
    assert cert.first_break_k <= math.ceil(math.log(max(reduced, 2), b)) + 2


def test_certificate_tight_at_extremal_difference():
    for b in range(2, 51):
        res = beta(b)
        diff = b**res.K // res.beta
        assert difference_certificate(diff, b).bound == (b - 1) * res.beta


def test_certificate_dominates_measured_runs_sample():
    # small spot check; the full sweep lives in the acceptance suite
    for b in (3, 10):
        window = b**4
        for delta in (1, 2, 3, 5, 7, 9, 11, 25, 125):
            if delta % b == 0 or delta >= window:
                continue
            bound = difference_certificate(delta, b).bound
            for digit in range(1, b):
                run = longest_run_for_difference(delta, digit, b, window)
                assert run <= bound, (b, delta, digit)


def test_certificate_does_not_cover_written_zero_runs():
    # Excluding the digit 0 is not a proper Kempner set: small terms dodge
    # position-k checks through leading zeros, and runs may exceed the bound.
    bound = difference_certificate(125, 10).bound
    assert bound == 72
    run = longest_run_for_difference(125, 0, 10, 10**4)
    assert run == 80
    assert run > bound
