"""Acceptance criteria, one test each, with their runtime budgets.

Every test records a PASS/FAIL line; ``conftest.py`` prints them at the end
of the session. Run ``python tests/test_acceptance.py`` for the lines alone.
"""
import time
from contextlib import contextmanager
from fractions import Fraction
from math import comb, pi, sqrt

import mpmath
import pytest

from latticecount.asymptotics import asymptotic_error_profile, expansion_terms, growth_base
from latticecount.ballot import ballot_number, dyck_prefix_count, square_identity_sides
from latticecount.cli import main
from latticecount.delannoy import CentralAlgorithm, central_sequence, delannoy_table, recurrence_residual
from latticecount.oracles import brute_force_ballot, brute_force_dyck_prefix
from latticecount.ruin import RuinSpec, duration_distribution, expected_abs_lead, ruin_prob_binomial, ruin_prob_trig
from latticecount.walks import (
    SCHROEDER,
    count_paths,
    schroeder_residual,
    schroeder_series,
    schroeder_series_from_counts,
    verify_bridge_decomposition,
)

RESULTS = {}

# transcribed from the published array: first line is k = 9, columns n = 0..9
PRINTED_ARRAY = """
1 19 181 1159 5641 22363 75517 224143 598417 1462563
1 17 145 833 3649 13073 40081 108545 265729 598417
1 15 113 575 2241 7183 19825 48639 108545 224143
1 13 85 377 1289 3653 8989 19825 40081 75517
1 11 61 231 681 1683 3653 7183 13073 22363
1 9 41 129 321 681 1289 2241 3649 5641
1 7 25 63 129 231 377 575 833 1159
1 5 13 25 41 61 85 113 145 181
1 3 5 7 9 11 13 15 17 19
1 1 1 1 1 1 1 1 1 1
"""
PRINTED_SERIES = [1, 3, 13, 63, 321, 1683, 8989, 48639]
PRINTED_DECIMALS = ["5.82842709", "0.57268163", "0.06724283", "0.00625063"]


@contextmanager
def criterion(key, title, budget):
    start = time.perf_counter()
    try:
        yield
    except BaseException as exc:
        RESULTS[key] = (False, f"{title} ({exc.__class__.__name__}: {str(exc).splitlines()[0] if str(exc) else ''})")
        raise
    elapsed = time.perf_counter() - start
    ok = elapsed < budget
    RESULTS[key] = (ok, f"{title} [{elapsed:.3f}s / budget {budget}s]")
    assert ok, f"runtime {elapsed:.3f}s exceeds {budget}s"


def test_c01_array_reproduction(capsys):
    with criterion("01", "array reproduction: 100 printed entries + D(10,10)", 0.1):
        code = main(["table", "10", "10"])
        out = capsys.readouterr().out
        assert code == 0
        assert [line.split() for line in out.splitlines()] == [
            line.split() for line in PRINTED_ARRAY.strip().splitlines()
        ]
        assert delannoy_table(10, 10)[10, 10] == 8097453


def test_c02_central_five_way():
    with criterion("02", "central sequence: five algorithms agree for n <= 200", 5):
        reference = central_sequence(200, CentralAlgorithm.GRID_DP)
        for algo in CentralAlgorithm:
            assert central_sequence(200, algo) == reference, algo
        assert reference[:8] == PRINTED_SERIES


def test_c03_p_recurrence():
    with criterion("03", "P-recurrence residual zero for n <= 200", 2):
        d = central_sequence(202, CentralAlgorithm.GRID_DP)
        assert all(recurrence_residual(d, n) == 0 for n in range(201))


def test_c04_bridge_decomposition():
    with criterion("04", "bridge decomposition to order 40, odd coefficients 0", 2):
        report = verify_bridge_decomposition(40)
        assert report.passed, report.first_mismatch


def test_c05_schroeder():
    with criterion("05", "Schroeder: excursion DP = S(z) for lengths 0..24; algebraic equation to order 40", 2):
        series = schroeder_series(40)
        for length in range(25):
            assert count_paths(SCHROEDER, "excursion", length) == series[length]
        assert schroeder_residual(schroeder_series_from_counts(40)).is_zero()


def test_c06_ruin_three_way():
    with criterion("06", "ruin: binomial = DP, |trig - exact| <= 1e-9, parity zeros, mass = 1 (n<=6, m<=60)", 5):
        for n in range(1, 7):
            dist = duration_distribution(n, 60)
            assert dist.total_mass == 1
            for m in range(1, 61):
                spec = RuinSpec(n, m)
                exact = dist.prob(m)
                if m >= n:
                    assert ruin_prob_binomial(spec) == exact
                    assert abs(ruin_prob_trig(spec) - float(exact)) <= 1e-9
                if m < n or (m - n) % 2:
                    assert exact == 0
                    assert ruin_prob_binomial(spec) == 0
            for horizon in range(n, 61):
                assert duration_distribution(n, horizon).total_mass == 1


def test_c07_ballot_oracle():
    with criterion("07", "ballot/Dyck prefix vs brute force (x<=y<=10, n<=16)", 10):
        for y in range(11):
            for x in range(y + 1):
                assert ballot_number(x, y) == brute_force_ballot(x, y)
        for n in range(17):
            for k in range(n % 2, n + 1, 2):
                assert dyck_prefix_count(n, k) == brute_force_dyck_prefix(n, k)


def test_c08a_growth_base_decimal():
    with criterion("08a", "asymptotics: growth base reproduces printed 5.82842709", 1):
        assert mpmath.nstr(growth_base(), 9) == PRINTED_DECIMALS[0]


def test_c08b_expansion_decimals_and_decay():
    with criterion("08b", "asymptotics: 0.57268163, 0.06724283, 0.00625063; error < 1e-3 at n=10; decay through n=80", 1):
        c1, c2, c3 = (t.coefficient for t in expansion_terms())
        assert mpmath.nstr(c1, 8) == PRINTED_DECIMALS[1]
        assert mpmath.nstr(-c2, 7) == PRINTED_DECIMALS[2]
        assert mpmath.nstr(c3, 6) == PRINTED_DECIMALS[3]
        rows = {r.n: r.relative_error for r in asymptotic_error_profile([10, 20, 40, 80])}
        assert rows[10] < 1e-3
        for n in (10, 20, 40):
            assert rows[2 * n] < rows[n]
            assert rows[2 * n] / rows[n] <= 0.2


def test_c09_square_identity():
    with criterion("09", "sum (p-2k)^2 C(p,k) = p 2^p for p <= 200", 1):
        for p in range(201):
            lhs, rhs = square_identity_sides(p)
            assert lhs == rhs
            # independent evaluation with math.comb
            assert sum((p - 2 * k) ** 2 * comb(p, k) for k in range(p + 1)) == p * 2**p == rhs


def test_c10_expected_lead():
    with criterion("10", "E|S_2n|: 1, 3/2 at n=1,2; ratio to sqrt(4n/pi) in [0.99, 1.01] at n=100", 1):
        assert expected_abs_lead(1) == 1
        assert expected_abs_lead(2) == Fraction(3, 2)
        ratio = float(expected_abs_lead(100)) / sqrt(4 * 100 / pi)
        assert 0.99 <= ratio <= 1.01


if __name__ == "__main__":
    import sys

    sys.exit(pytest.main([__file__, "-q", "-p", "no:cacheprovider"]))
