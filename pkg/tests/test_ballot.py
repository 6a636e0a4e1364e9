from fractions import Fraction

import pytest

from latticecount.ballot import (
    ballot_number,
    ballot_number_ratio,
    dyck_prefix_count,
    square_identity_sides,
    verify_square_identity,
)
from latticecount.errors import DomainError, ParityError
from latticecount.oracles import brute_force_ballot, brute_force_dyck_prefix
from latticecount.walks import DYCK, count_paths


@pytest.mark.parametrize("y", range(8))
def test_ballot_zero_minority(y):
    assert ballot_number(0, y) == 1


def test_ballot_small():
    assert ballot_number(1, 1) == 1
    assert ballot_number(3, 3) == 5
    assert brute_force_ballot(3, 3) == 5


def test_ballot_matches_enumeration():
    for y in range(11):
        for x in range(y + 1):
            assert ballot_number(x, y) == brute_force_ballot(x, y), (x, y)


def test_ballot_forms_agree():
    for y in range(31):
        for x in range(y + 1):
            ratio = ballot_number_ratio(x, y)
            assert ratio.denominator == 1
            assert ratio == ballot_number(x, y)


def test_ballot_domain():
    with pytest.raises(DomainError):
        ballot_number(4, 3)
    with pytest.raises(DomainError):
        ballot_number_ratio(-1, 3)


@pytest.mark.parametrize("n,k,expected", [(0, 0, 1), (3, 1, 2), (6, 0, 5), (2, 2, 1)])
def test_dyck_prefix_small(n, k, expected):
    assert dyck_prefix_count(n, k) == expected
    assert brute_force_dyck_prefix(n, k) == expected


def test_dyck_prefix_matches_meander_dp():
    for n in range(17):
        row = 0
        for k in range(n % 2, n + 1, 2):
            c = dyck_prefix_count(n, k)
            assert c == count_paths(DYCK, "meander", n, end=k)
            row += c
        assert row == count_paths(DYCK, "meander", n)


def test_dyck_prefix_errors():
    with pytest.raises(ParityError):
        dyck_prefix_count(3, 0)
    with pytest.raises(DomainError):
        dyck_prefix_count(3, 5)
    with pytest.raises(DomainError):
        dyck_prefix_count(3, -1)


def test_square_identity():
    assert square_identity_sides(0) == (0, 0)
    assert square_identity_sides(2) == (8, 8)
    for p in range(201):
        assert verify_square_identity(p).passed
    assert verify_square_identity(64).status == "pass"
