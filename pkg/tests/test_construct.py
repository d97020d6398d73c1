import pytest

from kempner.arith import beta, ell
from kempner.construct import explain_construction, max_progression
from kempner.digits import Progression, digit_at, verify_progression
from kempner.errors import DomainError


def test_examples():
    p, s = max_progression(10)
    assert p == Progression(0, 125, 72)
    assert s.excluded == (9,)

    p, s = max_progression(12)
    assert p == Progression(0, 16, 99)
    assert s.excluded == (11,)

    p, s = max_progression(3)
    assert p == Progression(0, 3, 2)
    assert s.excluded == (2,)

    p, s = max_progression(2)
    assert p == Progression(0, 0, 1)

    with pytest.raises(DomainError):
        max_progression(1)


def test_construction_verifies_and_is_maximal():
    for b in range(2, 61):
        p, s = max_progression(b)
        assert p.length == ell(b)
        assert verify_progression(p, s) is None
        if p.length == 1:
            continue
        extended = Progression(p.start, p.difference, p.length + 1)
        v = verify_progression(extended, s)
        assert v is not None
        assert v.index == p.length
        # the first overflow term is exactly (b-1) * b**K
        assert v.term == (b - 1) * b ** beta(b).K
        assert digit_at(v.term, b, beta(b).K) == b - 1


def test_low_positions_never_carry_top_digit():
    for b in range(2, 31):
        p, _ = max_progression(b)
        K = beta(b).K
        for t in p.terms():
            for k in range(K):
                assert digit_at(t, b, k) != b - 1


def test_explain_construction():
    rep = explain_construction(10)
    assert rep.K == 3 and rep.difference == 125
    assert [(c.k, c.gcd, c.threshold) for c in rep.checks] == [
        (0, 5, 1),
        (1, 25, 10),
        (2, 125, 100),
    ]
    assert all(c.holds for c in rep.checks)

    rep = explain_construction(2)
    assert rep.checks == ()
    assert rep.difference == 2 and rep.length == 1

    rep = explain_construction(4)
    assert [(c.k, c.gcd, c.threshold, c.holds) for c in rep.checks] == [(0, 2, 1, True)]

    assert len(explain_construction(10).lines()) == 4


def test_separation_holds_generally():
    for b in range(2, 201):
        rep = explain_construction(b)
        assert all(c.holds for c in rep.checks), b
