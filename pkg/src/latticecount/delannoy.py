"""Delannoy array D(n, k) and the central numbers d_n = D(n, n).

D(n, k) counts walks from (0, 0) to (n, k) using the steps (1, 0), (0, 1)
and (1, 1). The central sequence is available through five independent
routes; :data:`CentralAlgorithm.GRID_DP` is the reference the others are
checked against.
"""
from __future__ import annotations

import enum
from fractions import Fraction
from math import factorial

from . import kernels
from .errors import DomainError, InternalNonInteger
from .exactnum import TruncatedSeries, series_div, series_sqrt


class CentralAlgorithm(enum.Enum):
    GRID_DP = "grid_dp"
    BINOMIAL_SUM = "binomial_sum"
    P_RECURRENCE = "p_recurrence"
    SERIES_EXTRACTION = "series_extraction"
    LEGENDRE = "legendre"


# short names used on the command line
ALGORITHM_ALIASES = {
    "dp": CentralAlgorithm.GRID_DP,
    "sum": CentralAlgorithm.BINOMIAL_SUM,
    "rec": CentralAlgorithm.P_RECURRENCE,
    "series": CentralAlgorithm.SERIES_EXTRACTION,
    "legendre": CentralAlgorithm.LEGENDRE,
}


def _check_index(name: str, value: int) -> None:
    if value < 0:
        raise DomainError(f"{name} must be >= 0, got {value}")


class DelannoyTable:
    """Immutable table of D(n, k) for 0 <= n <= n_max, 0 <= k <= k_max.

    Index as ``table[n, k]`` or through ``table.entries[n][k]``.
    """

    __slots__ = ("entries",)

    def __init__(self, entries):
        self.entries: tuple[tuple[int, ...], ...] = tuple(tuple(row) for row in entries)

    @property
    def n_max(self) -> int:
        return len(self.entries) - 1

    @property
    def k_max(self) -> int:
        return len(self.entries[0]) - 1

    def __getitem__(self, nk: tuple[int, int]) -> int:
        n, k = nk
        if n < 0 or k < 0:
            return 0
        return self.entries[n][k]

    def display_rows(self) -> list[list[int]]:
        """Rows in printed order: k = k_max first, k = 0 last; columns by n."""
        return [[self.entries[n][k] for n in range(self.n_max + 1)] for k in range(self.k_max, -1, -1)]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DelannoyTable):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self) -> int:
        return hash(self.entries)

    def __repr__(self) -> str:
        return f"DelannoyTable(n_max={self.n_max}, k_max={self.k_max})"


def delannoy_table(n_max: int, k_max: int) -> DelannoyTable:
    _check_index("n_max", n_max)
    _check_index("k_max", k_max)
    return DelannoyTable(kernels.delannoy_grid(n_max, k_max))


def delannoy_binomial(n: int, k: int) -> int:
    """D(n, k) = sum_i C(n, i) C(k, i) 2^i."""
    if n < 0 or k < 0:
        return 0
    return kernels.delannoy_binomial_sum(n, k)


def delannoy_count_by_length(n: int, k: int, m: int) -> int:
    """Walks to (n, k) made of exactly ``m`` steps.

    With d = n + k - m diagonal steps the count is the multinomial
    m! / (d! (n-d)! (k-d)!), nonzero only for max(n, k) <= m <= n + k.
    """
    if n < 0 or k < 0 or m < 0:
        return 0
    if not max(n, k) <= m <= n + k:
        return 0
    d = n + k - m
    return factorial(m) // (factorial(d) * factorial(n - d) * factorial(k - d))


def legendre_sequence(n_max: int, x: int = 3) -> list[int]:
    """P_0(x)..P_n_max(x) by (k+1) P_{k+1} = (2k+1) x P_k - k P_{k-1}.

    Runs in exact rationals and insists every value is an integer, which
    holds for x = 3; anything else raises :class:`InternalNonInteger`.
    """
    _check_index("n", n_max)
    x = Fraction(x)
    values = [Fraction(1), x]
    for k in range(1, n_max):
        values.append(((2 * k + 1) * x * values[k] - k * values[k - 1]) / (k + 1))
    out = []
    for k, v in enumerate(values[: n_max + 1]):
        if v.denominator != 1:
            raise InternalNonInteger(f"P_{k}({x}) = {v} is not an integer")
        out.append(v.numerator)
    return out


def legendre_at_3(n: int) -> int:
    return legendre_sequence(n)[n]


def central_series(order: int) -> TruncatedSeries:
    """1 / sqrt(1 - 6z + z^2) to the given order."""
    radicand = TruncatedSeries.from_polynomial([1, -6, 1], order)
    return series_div(TruncatedSeries.constant(1, order), series_sqrt(radicand))


def _as_algorithm(algo) -> CentralAlgorithm:
    if isinstance(algo, CentralAlgorithm):
        return algo
    if algo in ALGORITHM_ALIASES:
        return ALGORITHM_ALIASES[algo]
    try:
        return CentralAlgorithm(algo)
    except ValueError:
        raise DomainError(f"unknown central algorithm {algo!r}") from None


def central_sequence(n_max: int, algo=CentralAlgorithm.GRID_DP) -> list[int]:
    """d_0..d_n_max computed by one algorithm."""
    _check_index("n", n_max)
    algo = _as_algorithm(algo)
    if algo is CentralAlgorithm.GRID_DP:
        return kernels.central_grid(n_max)
    if algo is CentralAlgorithm.BINOMIAL_SUM:
        return [kernels.delannoy_binomial_sum(n, n) for n in range(n_max + 1)]
    if algo is CentralAlgorithm.P_RECURRENCE:
        return kernels.central_recurrence(n_max)
    if algo is CentralAlgorithm.SERIES_EXTRACTION:
        series = central_series(n_max)
        out = []
        for n, c in enumerate(series.coefficients):
            if c.denominator != 1:
                raise InternalNonInteger(f"[z^{n}] D(z) = {c} is not an integer")
            out.append(c.numerator)
        return out
    return legendre_sequence(n_max)


def central_delannoy(n: int, algo=CentralAlgorithm.GRID_DP) -> int:
    """d_n = D(n, n) by the chosen algorithm; all five agree."""
    _check_index("n", n)
    algo = _as_algorithm(algo)
    if algo is CentralAlgorithm.BINOMIAL_SUM:
        return kernels.delannoy_binomial_sum(n, n)
    return central_sequence(n, algo)[n]


def recurrence_residual(d: list[int], n: int) -> int:
    """(n+2) d_{n+2} - (6n+9) d_{n+1} + (n+1) d_n; zero for the central sequence."""
    return (n + 2) * d[n + 2] - (6 * n + 9) * d[n + 1] + (n + 1) * d[n]
