from fractions import Fraction
from itertools import product
from math import comb, pi, sqrt

import pytest

from latticecount.errors import DomainError
from latticecount.ruin import (
    RuinSpec,
    duration_distribution,
    expected_abs_lead,
    ruin_prob_binomial,
    ruin_prob_dp,
    ruin_prob_trig,
)


def brute_ruin(n, m):
    """Enumerate all 2^m sign sequences and count first hits of +/-n at step m."""
    hits = 0
    for steps in product((1, -1), repeat=m):
        h = 0
        for i, s in enumerate(steps, 1):
            h += s
            if abs(h) == n:
                hits += i == m
                break
    return Fraction(hits, 2**m)


@pytest.mark.parametrize("n,m,expected", [(1, 1, 1), (2, 2, Fraction(1, 2)), (2, 4, Fraction(1, 4)), (3, 3, Fraction(1, 4))])
def test_dp_small(n, m, expected):
    assert ruin_prob_dp(RuinSpec(n, m)) == expected


def test_dp_matches_enumeration():
    for n in range(1, 5):
        for m in range(1, 13):
            assert ruin_prob_dp(RuinSpec(n, m)) == brute_ruin(n, m)


def test_binomial_forced_and_small():
    assert ruin_prob_binomial(RuinSpec(1, 1)) == 1
    assert ruin_prob_binomial(RuinSpec(2, 4)) == Fraction(1, 4)
    assert ruin_prob_binomial(RuinSpec(3, 7)) == ruin_prob_dp(RuinSpec(3, 7))


def test_trig_small():
    assert ruin_prob_trig(RuinSpec(1, 1)) == pytest.approx(1.0, abs=1e-15)
    assert ruin_prob_trig(RuinSpec(1, 3)) == pytest.approx(0.0, abs=1e-15)
    assert ruin_prob_trig(RuinSpec(2, 2)) == pytest.approx(0.5, abs=1e-9)


def test_three_way_agreement():
    for n in range(1, 7):
        for m in range(n, 61):
            spec = RuinSpec(n, m)
            exact = ruin_prob_dp(spec)
            assert ruin_prob_binomial(spec) == exact
            assert abs(ruin_prob_trig(spec) - float(exact)) <= 1e-9


def test_trig_within_tolerance_to_m_100():
    for n in range(1, 9):
        dist = duration_distribution(n, 100)
        for m in range(1, 101):
            assert abs(ruin_prob_trig(RuinSpec(n, m)) - float(dist.prob(m))) <= 1e-9


def test_parity_zeros():
    for n in range(1, 7):
        for m in range(1, 61):
            if m < n or (m - n) % 2:
                assert ruin_prob_binomial(RuinSpec(n, m)) == 0
                assert ruin_prob_dp(RuinSpec(n, m)) == 0


def test_distribution_examples():
    d1 = duration_distribution(1, 5)
    assert d1.probs == {1: 1}
    assert d1.survival == 0
    d2 = duration_distribution(2, 10)
    assert d2.probs == {m: Fraction(1, 2 ** (m // 2)) for m in (2, 4, 6, 8, 10)}
    assert d2.survival == Fraction(1, 32)


def test_distribution_mass_and_symmetry():
    for n in range(1, 7):
        for horizon in range(n, 61, 7):
            dist = duration_distribution(n, horizon)
            assert dist.total_mass == 1
            assert all(0 <= p <= 1 for p in dist.probs.values())
            assert dist.up == dist.down


def test_mean_duration():
    assert abs(float(duration_distribution(3, 300).partial_mean) - 9) < 0.01
    for n in range(1, 5):
        mean = float(duration_distribution(n, 40 * n * n).partial_mean)
        assert abs(mean - n * n) <= 0.01 * n * n


def test_expected_abs_lead():
    assert expected_abs_lead(1) == 1
    assert expected_abs_lead(2) == Fraction(3, 2)
    # closed form E|S_2n| = 2n C(2n, n) / 4^n as an independent check
    for n in range(1, 30):
        assert expected_abs_lead(n) == Fraction(2 * n * comb(2 * n, n), 4**n)
    ratio = float(expected_abs_lead(100)) / sqrt(4 * 100 / pi)
    assert 0.99 <= ratio <= 1.01


def test_domain_errors():
    with pytest.raises(DomainError):
        RuinSpec(0, 3)
    with pytest.raises(DomainError):
        RuinSpec(2, 0)
    with pytest.raises(DomainError):
        duration_distribution(3, 2)
    with pytest.raises(DomainError):
        expected_abs_lead(0)
