"""Reflection-principle counts: ballot numbers and Dyck prefixes.

Binomial coefficients are written C(n, k) = "choose k from n" and vanish
outside 0 <= k <= n.
"""
from __future__ import annotations

from fractions import Fraction

from .errors import DomainError, ParityError
from .exactnum import binomial
from .report import Mismatch, VerificationReport


def ballot_number(x: int, y: int) -> int:
    """T(x, y) = C(x+y, x) - C(x+y, x-1) for 0 <= x <= y.

    Counts arrangements of x minority and y majority steps in which the
    majority is never behind.
    """
    if x < 0 or x > y:
        raise DomainError(f"ballot numbers need 0 <= x <= y, got x={x}, y={y}")
    return binomial(x + y, x) - binomial(x + y, x - 1)


def ballot_number_ratio(x: int, y: int) -> Fraction:
    """The same count as ``(y - x + 1) / (y + 1) * C(x+y, x)``, kept exact."""
    if x < 0 or x > y:
        raise DomainError(f"ballot numbers need 0 <= x <= y, got x={x}, y={y}")
    return Fraction(y - x + 1, y + 1) * binomial(x + y, x)


def dyck_prefix_count(n: int, k: int) -> int:
    """Paths of n steps +/-1 from 0 to k that never go below 0.

    Reflection across -1 gives C(n, (n+k)/2) - C(n, (n+k)/2 + 1).
    """
    if k < 0 or k > n:
        raise DomainError(f"need 0 <= k <= n, got n={n}, k={k}")
    if (n - k) % 2:
        raise ParityError(f"n={n} and k={k} differ in parity")
    ups = (n + k) // 2
    return binomial(n, ups) - binomial(n, ups + 1)


def square_identity_sides(p: int) -> tuple[int, int]:
    """Both sides of sum_k (p - 2k)^2 C(p, k) = p 2^p."""
    if p < 0:
        raise DomainError(f"p must be >= 0, got {p}")
    lhs = sum((p - 2 * k) ** 2 * binomial(p, k) for k in range(p + 1))
    return lhs, p << p


def verify_square_identity(p: int) -> VerificationReport:
    lhs, rhs = square_identity_sides(p)
    mismatch = None if lhs == rhs else Mismatch(f"p={p}", rhs, lhs)
    return VerificationReport("square-identity", f"p={p}", mismatch)
