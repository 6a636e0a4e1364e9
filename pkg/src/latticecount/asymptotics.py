"""Three-term singularity-analysis expansion of the central Delannoy numbers.

    d_n ~ (3 + 2 sqrt 2)^n / (sqrt(pi) sqrt(3 sqrt 2 - 4))
          * ( n^(-1/2) / 2
              - 23 n^(-3/2) / (32 (8 + 3 sqrt 2))
              + 2401 n^(-5/2) / (2048 (113 + 72 sqrt 2)) + O(n^(-7/2)) )

All constants are rebuilt from the radicals with mpmath at ``PRECISION``
significant digits.
"""
from __future__ import annotations

from dataclasses import dataclass

import mpmath

from . import kernels
from .errors import DomainError

PRECISION = 50

# private context so the global mpmath precision is left alone
_mp = mpmath.mp.clone()
_mp.dps = PRECISION


def _ctx():
    return _mp


@dataclass(frozen=True)
class ExpansionTerm:
    coefficient: mpmath.mpf  # prefactor already folded in
    exponent: mpmath.mpf


def growth_base() -> mpmath.mpf:
    ctx = _ctx()
    return 3 + 2 * ctx.sqrt(2)


def prefactor() -> mpmath.mpf:
    """1 / (sqrt(pi) sqrt(3 sqrt 2 - 4))."""
    ctx = _ctx()
    return 1 / (ctx.sqrt(ctx.pi) * ctx.sqrt(3 * ctx.sqrt(2) - 4))


def expansion_terms() -> list[ExpansionTerm]:
    """The three bracket terms multiplied by the prefactor.

    Coefficients evaluate to about 0.5727, -0.06724 and 0.006251.
    """
    ctx = _ctx()
    r2 = ctx.sqrt(2)
    c = prefactor()
    raw = [
        (ctx.mpf(1) / 2, ctx.mpf(-1) / 2),
        (-ctx.mpf(23) / (32 * (8 + 3 * r2)), ctx.mpf(-3) / 2),
        (ctx.mpf(2401) / (2048 * (113 + 72 * r2)), ctx.mpf(-5) / 2),
    ]
    return [ExpansionTerm(c * coef, exp) for coef, exp in raw]


def central_asymptotic(n: int, terms: int = 3) -> mpmath.mpf:
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    if terms not in (1, 2, 3):
        raise DomainError(f"terms must be 1, 2 or 3, got {terms}")
    ctx = _ctx()
    n_ = ctx.mpf(n)
    bracket = ctx.fsum(t.coefficient * n_**t.exponent for t in expansion_terms()[:terms])
    return growth_base() ** n * bracket


@dataclass(frozen=True)
class ErrorRow:
    n: int
    exact: int
    approx: mpmath.mpf
    relative_error: mpmath.mpf

    @property
    def scaled_error(self) -> mpmath.mpf:
        """relative error * n^3; roughly constant when the decay is O(n^-3)."""
        return self.relative_error * mpmath.mpf(self.n) ** 3


def asymptotic_error_profile(n_values, terms: int = 3) -> list[ErrorRow]:
    """Relative error |approx / d_n - 1| for each n, against exact d_n."""
    n_values = list(n_values)
    if any(n < 1 for n in n_values):
        raise DomainError("all n must be >= 1")
    if not n_values:
        return []
    exact = kernels.central_recurrence(max(n_values))
    ctx = _ctx()
    rows = []
    for n in n_values:
        approx = central_asymptotic(n, terms)
        # mpf(int) rounds the big integer directly; no float round-trip
        rel = abs(approx / ctx.mpf(exact[n]) - 1)
        rows.append(ErrorRow(n, exact[n], approx, rel))
    return rows
