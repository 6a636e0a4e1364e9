"""Exact scalars and truncated power series over the rationals.

Integers are plain Python ``int`` and rationals are :class:`fractions.Fraction`
(always in lowest terms with a positive denominator). A :class:`TruncatedSeries`
stores the coefficients ``c_0..c_N`` of a power series known only up to
``z**N``; coefficients past the order are unknown, not zero, so every binary
operation returns the smaller of the two input orders.
"""
from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Iterable, Union

from .errors import BadConstantTerm, OrderExceeded, ZeroConstantTerm

Rational = Union[int, Fraction]


def binomial(n: int, k: int) -> int:
    """C(n, k), taken to be 0 when k < 0, k > n or n < 0."""
    if n < 0 or k < 0 or k > n:
        return 0
    return comb(n, k)


def to_int(value: Rational) -> int:
    """Return ``value`` as an int, raising if it has a denominator."""
    value = Fraction(value)
    if value.denominator != 1:
        raise ValueError(f"{value} is not an integer")
    return value.numerator


def format_rational(value: Rational) -> str:
    """Render as ``p/q``, dropping ``/1``."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


class TruncatedSeries:
    """Power series with exact rational coefficients, truncated at ``order``."""

    __slots__ = ("coefficients",)

    def __init__(self, coefficients: Iterable[Rational], order: int | None = None):
        coeffs = [Fraction(c) for c in coefficients]
        if order is None:
            order = len(coeffs) - 1
        if order < 0:
            raise ValueError("series order must be >= 0")
        if len(coeffs) > order + 1:
            coeffs = coeffs[: order + 1]
        coeffs.extend(Fraction(0) for _ in range(order + 1 - len(coeffs)))
        self.coefficients: tuple[Fraction, ...] = tuple(coeffs)

    @classmethod
    def constant(cls, value: Rational, order: int) -> TruncatedSeries:
        return cls([value], order)

    @classmethod
    def from_polynomial(cls, coeffs: Iterable[Rational], order: int) -> TruncatedSeries:
        """A polynomial, zero-padded out to ``order``."""
        return cls(list(coeffs)[: order + 1], order)

    @property
    def order(self) -> int:
        return len(self.coefficients) - 1

    def __len__(self) -> int:
        return len(self.coefficients)

    def __getitem__(self, k: int) -> Fraction:
        return series_coeff(self, k)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        n = min(self.order, other.order)
        return self.coefficients[: n + 1] == other.coefficients[: n + 1]

    __hash__ = None  # equality is order-dependent, not an equivalence

    def __add__(self, other: TruncatedSeries) -> TruncatedSeries:
        return series_add(self, other)

    def __sub__(self, other: TruncatedSeries) -> TruncatedSeries:
        return series_add(self, other.scale(-1))

    def __mul__(self, other: TruncatedSeries) -> TruncatedSeries:
        return series_mul(self, other)

    def __truediv__(self, other: TruncatedSeries) -> TruncatedSeries:
        return series_div(self, other)

    def __neg__(self) -> TruncatedSeries:
        return self.scale(-1)

    def scale(self, factor: Rational) -> TruncatedSeries:
        factor = Fraction(factor)
        return TruncatedSeries([c * factor for c in self.coefficients], self.order)

    def truncate(self, order: int) -> TruncatedSeries:
        if order > self.order:
            raise OrderExceeded(f"cannot extend a series of order {self.order} to {order}")
        return TruncatedSeries(self.coefficients[: order + 1], order)

    def shift_up(self, k: int) -> TruncatedSeries:
        """Multiply by z**k; the order grows by k."""
        return TruncatedSeries([0] * k + list(self.coefficients), self.order + k)

    def shift_down(self, k: int) -> TruncatedSeries:
        """Divide by z**k; the low k coefficients must vanish. Order drops by k."""
        if k > self.order:
            raise OrderExceeded(f"cannot divide a series of order {self.order} by z^{k}")
        if any(c != 0 for c in self.coefficients[:k]):
            raise ZeroConstantTerm(f"series is not divisible by z^{k}")
        return TruncatedSeries(self.coefficients[k:], self.order - k)

    def substitute_power(self, k: int) -> TruncatedSeries:
        """Return f(z**k); the order becomes k * order."""
        coeffs = [Fraction(0)] * (k * self.order + 1)
        for i, c in enumerate(self.coefficients):
            coeffs[k * i] = c
        return TruncatedSeries(coeffs, k * self.order)

    def is_zero(self) -> bool:
        return not any(self.coefficients)

    def __repr__(self) -> str:
        terms = []
        for i, c in enumerate(self.coefficients):
            if c == 0:
                continue
            mono = "" if i == 0 else ("z" if i == 1 else f"z^{i}")
            coef = format_rational(c)
            if mono and coef in ("1", "-1"):
                coef = coef[:-1]
            terms.append(f"{coef}{mono}")
        body = " + ".join(terms).replace("+ -", "- ") or "0"
        return f"TruncatedSeries({body} + O(z^{self.order + 1}))"


def series_add(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    n = min(a.order, b.order)
    return TruncatedSeries([a.coefficients[i] + b.coefficients[i] for i in range(n + 1)], n)


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product truncated to the smaller order."""
    n = min(a.order, b.order)
    ac, bc = a.coefficients, b.coefficients
    out = []
    for k in range(n + 1):
        out.append(sum((ac[i] * bc[k - i] for i in range(k + 1)), Fraction(0)))
    return TruncatedSeries(out, n)


def series_div(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Return q with q*b = a up to the smaller order.

    Raises :class:`ZeroConstantTerm` when b has no constant term.
    """
    b0 = b.coefficients[0]
    if b0 == 0:
        raise ZeroConstantTerm("divisor has zero constant term")
    n = min(a.order, b.order)
    ac, bc = a.coefficients, b.coefficients
    q: list[Fraction] = []
    for k in range(n + 1):
        acc = ac[k]
        for i in range(k):
            acc -= q[i] * bc[k - i]
        q.append(acc / b0)
    return TruncatedSeries(q, n)


def series_sqrt(a: TruncatedSeries) -> TruncatedSeries:
    """Square root with constant term 1.

    Solves b**2 = a coefficient by coefficient:
    ``b_k = (a_k - sum_{0<i<k} b_i b_{k-i}) / 2``.
    """
    ac = a.coefficients
    if ac[0] != 1:
        raise BadConstantTerm(f"series_sqrt needs constant term 1, got {format_rational(ac[0])}")
    half = Fraction(1, 2)
    b = [Fraction(1)]
    for k in range(1, a.order + 1):
        acc = ac[k]
        for i in range(1, k):
            acc -= b[i] * b[k - i]
        b.append(acc * half)
    return TruncatedSeries(b, a.order)


def series_coeff(a: TruncatedSeries, k: int) -> Fraction:
    """The coefficient of z**k; raises :class:`OrderExceeded` past the order."""
    if k < 0:
        raise IndexError("negative coefficient index")
    if k > a.order:
        raise OrderExceeded(f"coefficient z^{k} requested from a series of order {a.order}")
    return a.coefficients[k]


def geometric(order: int, ratio_power: int = 1) -> TruncatedSeries:
    """1/(1 - z**ratio_power) to the given order."""
    coeffs = [1 if i % ratio_power == 0 else 0 for i in range(order + 1)]
    return TruncatedSeries(coeffs, order)
