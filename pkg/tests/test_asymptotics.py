import mpmath
import pytest

from latticecount.asymptotics import (
    asymptotic_error_profile,
    central_asymptotic,
    expansion_terms,
    growth_base,
    prefactor,
)
from latticecount.errors import DomainError


def test_constants_against_printed_decimals():
    terms = expansion_terms()
    assert mpmath.nstr(terms[0].coefficient, 8) == "0.57268163"
    assert mpmath.nstr(-terms[1].coefficient, 7) == "0.06724283"
    assert mpmath.nstr(terms[2].coefficient, 6) == "0.00625063"


def test_growth_base_value():
    # 3 + 2 sqrt 2 = 5.828427124...; squared it is 17 + 12 sqrt 2
    b = growth_base()
    with mpmath.workdps(60):
        assert abs(b * b - (17 + 12 * mpmath.sqrt(2))) < mpmath.mpf(10) ** -40
    assert mpmath.nstr(b, 9) == "5.82842712"


def test_exponents_and_precision():
    assert [t.exponent for t in expansion_terms()] == [-0.5, -1.5, -2.5]
    assert abs(prefactor() - 2 * expansion_terms()[0].coefficient) < mpmath.mpf(10) ** -45


def test_relative_error_at_10():
    (row,) = asymptotic_error_profile([10])
    assert row.exact == 8097453
    assert row.relative_error < 1e-3


def test_monotone_improvement():
    for n in (10, 20, 40, 80):
        e = [asymptotic_error_profile([n], t)[0].relative_error for t in (1, 2, 3)]
        assert e[2] < e[1] < e[0]


def test_decay_order():
    rows = {r.n: r.relative_error for r in asymptotic_error_profile([10, 20, 40, 80])}
    for n in (10, 20, 40):
        assert rows[2 * n] / rows[n] <= 0.2
    assert rows[40] / rows[20] < 1 / 6


def test_small_n_smoke():
    (row,) = asymptotic_error_profile([1])
    assert mpmath.isfinite(row.relative_error)
    assert central_asymptotic(1, 1) > 0


def test_errors():
    with pytest.raises(DomainError):
        central_asymptotic(0)
    with pytest.raises(DomainError):
        central_asymptotic(5, 4)
    with pytest.raises(DomainError):
        asymptotic_error_profile([3, 0])
