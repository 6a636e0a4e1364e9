"""Duration of the fair gambler's-ruin game.

Each player starts with ``n`` francs and a fair coin moves one franc per
round, so the fortune difference is a +/-1 walk from 0 absorbed at +n or
-n. "Ruined at round m" means the walk first reaches +/-n at step m.

Three routes to the same law: a forward DP (the reference), Delannoy's
alternating binomial sum, and Rouche's trigonometric sum (floating point).
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from . import kernels
from .errors import DomainError
from .exactnum import binomial


@dataclass(frozen=True)
class RuinSpec:
    n: int
    m: int

    def __post_init__(self):
        if self.n < 1:
            raise DomainError(f"strip half-width n must be >= 1, got {self.n}")
        if self.m < 1:
            raise DomainError(f"round index m must be >= 1, got {self.m}")

    @property
    def q(self) -> Fraction:
        return Fraction(self.m - self.n, 2)

    @property
    def reachable(self) -> bool:
        return self.m >= self.n and (self.m - self.n) % 2 == 0


def ruin_prob_dp(spec: RuinSpec) -> Fraction:
    up, down, _ = kernels.strip_absorption(spec.n, spec.m)
    return Fraction(up[spec.m] + down[spec.m], 1 << spec.m)


def ruin_prob_binomial(spec: RuinSpec) -> Fraction:
    """n / 2^(m-1) * sum_{k=0}^{floor(q/n)} (-1)^k (2k+1) / ((m+n)/2 + kn) * C(m-1, q-kn)."""
    n, m = spec.n, spec.m
    if not spec.reachable:
        return Fraction(0)
    q = (m - n) // 2
    half = (m + n) // 2
    total = Fraction(0)
    for k in range(q // n + 1):
        term = Fraction(2 * k + 1, half + k * n) * binomial(m - 1, q - k * n)
        total += -term if k % 2 else term
    return total * Fraction(n, 1 << (m - 1))


def ruin_prob_trig(spec: RuinSpec) -> float:
    """(-1)^(m-n) / n * sum_{k=1}^n (-1)^(k-1) sin(a_k) cos(a_k)^(m-1), a_k = (2k-1) pi / (2n)."""
    n, m = spec.n, spec.m
    total = 0.0
    for k in range(1, n + 1):
        angle = (2 * k - 1) * math.pi / (2 * n)
        # 0^0 := 1 at n = 1, m = 1
        power = 1.0 if m == 1 else math.cos(angle) ** (m - 1)
        term = math.sin(angle) * power
        total += term if k % 2 else -term
    sign = -1.0 if (m - n) % 2 else 1.0
    return sign * total / n


RUIN_METHODS = {
    "dp": ruin_prob_dp,
    "binomial": ruin_prob_binomial,
    "trig": ruin_prob_trig,
}


@dataclass(frozen=True)
class DurationDistribution:
    """Law of the ruin time up to a horizon.

    ``probs`` holds the nonzero P(ruin at m) for m <= horizon; ``survival``
    is the mass still in play after the horizon. ``up`` and ``down`` split
    each absorption by the barrier that was hit.
    """

    n: int
    horizon: int
    probs: dict[int, Fraction]
    survival: Fraction
    up: dict[int, Fraction] = field(default_factory=dict, repr=False)
    down: dict[int, Fraction] = field(default_factory=dict, repr=False)

    def prob(self, m: int) -> Fraction:
        return self.probs.get(m, Fraction(0))

    @property
    def total_mass(self) -> Fraction:
        return sum(self.probs.values(), Fraction(0)) + self.survival

    @property
    def partial_mean(self) -> Fraction:
        """sum m P(m) over the horizon; a lower bound on the mean duration."""
        return sum((m * p for m, p in self.probs.items()), Fraction(0))


def duration_distribution(n: int, horizon: int) -> DurationDistribution:
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    if horizon < n:
        raise DomainError(f"horizon must be >= n, got horizon={horizon}, n={n}")
    up, down, alive = kernels.strip_absorption(n, horizon)
    probs, ups, downs = {}, {}, {}
    for m in range(1, horizon + 1):
        if up[m] or down[m]:
            scale = 1 << m
            probs[m] = Fraction(up[m] + down[m], scale)
            ups[m] = Fraction(up[m], scale)
            downs[m] = Fraction(down[m], scale)
    return DurationDistribution(n, horizon, probs, Fraction(alive, 1 << horizon), ups, downs)


def expected_abs_lead(n: int) -> Fraction:
    """E|S_2n| for a fair +/-1 walk of 2n steps, i.e. the expected gap
    between games won and lost after 2n games."""
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    steps = 2 * n
    total = sum(abs(2 * k - steps) * binomial(steps, k) for k in range(steps + 1))
    return Fraction(total, 1 << steps)
