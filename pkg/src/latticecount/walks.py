"""Counting one-dimensional lattice paths built from a finite jump set.

A jump takes ``time_len`` units of time and changes the height by ``dh``.
Paths start at height 0 and must tile the requested length exactly. The
four path classes differ only in whether they must end at 0 (bridge,
excursion) and whether they must stay at height >= 0 (meander, excursion).
Constraints are checked at jump endpoints; a multi-unit jump is atomic.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple, Optional

from . import kernels
from .errors import DomainError, InvalidBounds, InvalidEnd, InvalidJumpSystem
from .exactnum import TruncatedSeries, geometric, series_div, series_sqrt
from .report import Mismatch, VerificationReport


class Jump(NamedTuple):
    time_len: int
    dh: int

    @classmethod
    def make(cls, time_len: int, dh: int) -> Jump:
        if time_len < 1:
            raise InvalidJumpSystem(f"jump time length must be >= 1, got {time_len}")
        return cls(int(time_len), int(dh))


class JumpSystem(tuple):
    """A nonempty tuple of distinct :class:`Jump` values."""

    def __new__(cls, jumps: Iterable):
        items = tuple(Jump.make(*j) for j in jumps)
        if not items:
            raise InvalidJumpSystem("jump system is empty")
        if len(set(items)) != len(items):
            raise InvalidJumpSystem("jump system has duplicate jumps")
        return super().__new__(cls, items)

    @classmethod
    def parse(cls, text: str) -> JumpSystem:
        """Parse ``"t:dh,t:dh,..."``, e.g. ``"1:1,1:-1,2:0"``."""
        jumps = []
        for part in text.split(","):
            part = part.strip()
            try:
                t, dh = part.split(":")
                jumps.append(Jump.make(int(t), int(dh)))
            except ValueError as exc:
                if isinstance(exc, InvalidJumpSystem):
                    raise
                raise InvalidJumpSystem(f"bad jump {part!r}; expected 't:dh'") from None
        return cls(jumps)

    @property
    def max_rise(self) -> int:
        return max(max(j.dh, 0) for j in self)

    @property
    def max_fall(self) -> int:
        return max(max(-j.dh, 0) for j in self)

    def __repr__(self) -> str:
        return "JumpSystem(" + ",".join(f"{j.time_len}:{j.dh}" for j in self) + ")"


# a = up, b = down, c = level step of length 2
DYCK = JumpSystem([(1, 1), (1, -1)])
MOTZKIN = JumpSystem([(1, 1), (1, -1), (1, 0)])
SCHROEDER = JumpSystem([(1, 1), (1, -1), (2, 0)])


class PathClass(enum.Enum):
    WALK = "walk"
    BRIDGE = "bridge"
    MEANDER = "meander"
    EXCURSION = "excursion"

    @property
    def ends_at_zero(self) -> bool:
        return self in (PathClass.BRIDGE, PathClass.EXCURSION)

    @property
    def nonnegative(self) -> bool:
        return self in (PathClass.MEANDER, PathClass.EXCURSION)


@dataclass(frozen=True)
class StripBounds:
    """Height window; ``None`` means unbounded on that side."""

    lower: Optional[int] = None
    upper: Optional[int] = None

    def __post_init__(self):
        if self.lower is not None and self.lower > 0:
            raise InvalidBounds(f"lower bound {self.lower} excludes the start height 0")
        if self.upper is not None and self.upper < 0:
            raise InvalidBounds(f"upper bound {self.upper} excludes the start height 0")


def _as_class(cls) -> PathClass:
    if isinstance(cls, PathClass):
        return cls
    try:
        return PathClass(cls)
    except ValueError:
        raise DomainError(f"unknown path class {cls!r}") from None


def _height_window(js: JumpSystem, cls: PathClass, length: int, bounds: Optional[StripBounds]):
    lo = -js.max_fall * length
    hi = js.max_rise * length
    if bounds is not None:
        if bounds.lower is not None:
            lo = max(lo, bounds.lower)
        if bounds.upper is not None:
            hi = min(hi, bounds.upper)
    if cls.nonnegative:
        lo = max(lo, 0)
    return lo, hi


def _layers(js, cls, length, bounds):
    if length < 0:
        raise DomainError(f"length must be >= 0, got {length}")
    js = js if isinstance(js, JumpSystem) else JumpSystem(js)
    lo, hi = _height_window(js, cls, length, bounds)
    jumps = [(j.time_len, j.dh) for j in js]
    return kernels.walk_layers(jumps, length, lo, hi), lo, hi


def count_paths(
    js,
    cls,
    length: int,
    end: Optional[int] = None,
    bounds: Optional[StripBounds] = None,
) -> int:
    """Number of paths of the given class and total time ``length``.

    ``end`` fixes the final height (bridges and excursions end at 0
    anyway); ``bounds`` restricts every visited height.
    """
    cls = _as_class(cls)
    if cls.ends_at_zero:
        if end not in (None, 0):
            raise InvalidEnd(f"a {cls.value} ends at height 0, not {end}")
        end = 0
    layers, lo, hi = _layers(js, cls, length, bounds)
    final = layers[length]
    if end is None:
        return sum(final)
    if not lo <= end <= hi:
        return 0
    return final[end - lo]


def meander_end_profile(js, length: int) -> dict[int, int]:
    """Meanders of the given length, counted by final height (zeros omitted)."""
    layers, lo, _ = _layers(js, PathClass.MEANDER, length, None)
    return {lo + i: c for i, c in enumerate(layers[length]) if c}


def schroeder_numbers(n_max: int) -> list[int]:
    """Large Schroeder numbers s_0..s_n_max as excursions of length 2n."""
    if n_max < 0:
        raise DomainError(f"n_max must be >= 0, got {n_max}")
    # one DP run to the longest length; every shorter excursion is a prefix layer
    layers, lo, _ = _layers(SCHROEDER, PathClass.EXCURSION, 2 * n_max, None)
    return [layers[2 * n][-lo] for n in range(n_max + 1)]


def schroeder_series(order: int) -> TruncatedSeries:
    """S(z) = (1 - z^2 - sqrt(1 - 6z^2 + z^4)) / (2 z^2) to the given order.

    z marks unit time, so the Schroeder numbers sit at even powers.
    """
    work = order + 2
    radicand = TruncatedSeries.from_polynomial([1, 0, -6, 0, 1], work)
    numerator = TruncatedSeries.from_polynomial([1, 0, -1], work) - series_sqrt(radicand)
    return numerator.shift_down(2).scale(Fraction(1, 2))


def schroeder_series_from_counts(order: int) -> TruncatedSeries:
    """S(z) assembled from excursion DP counts instead of a radical."""
    s = schroeder_numbers(order // 2)
    coeffs = [0] * (order + 1)
    for n, v in enumerate(s):
        coeffs[2 * n] = v
    return TruncatedSeries(coeffs, order)


def schroeder_residual(s: TruncatedSeries) -> TruncatedSeries:
    """z^2 S^2 - (1 - z^2) S + 1, which vanishes for the Schroeder series."""
    order = s.order
    z2 = TruncatedSeries.from_polynomial([0, 0, 1], order)
    one_minus_z2 = TruncatedSeries.from_polynomial([1, 0, -1], order)
    one = TruncatedSeries.constant(1, order)
    return z2 * s * s - one_minus_z2 * s + one


def bridge_decomposition_series(order: int) -> TruncatedSeries:
    """1 / (1 - 2 z^2 S(z) / (1 - z^2)) * 1 / (1 - z^2), built from S by series algebra."""
    s = schroeder_series(order)
    level = geometric(order, 2)  # c* = 1/(1 - z^2)
    arches = s.shift_up(2).truncate(order).scale(2) * level
    one = TruncatedSeries.constant(1, order)
    return series_div(one, one - arches) * level


def verify_bridge_decomposition(order: int) -> VerificationReport:
    """Compare the Schroeder-based series with D(z^2) built from the grid DP.

    Even coefficients must be the central Delannoy numbers, odd ones zero.
    """
    if order < 2:
        raise DomainError(f"order must be >= 2, got {order}")
    lhs = bridge_decomposition_series(order)
    d = kernels.central_grid(order // 2)
    rhs = [d[i // 2] if i % 2 == 0 else 0 for i in range(order + 1)]
    name = "bridge-decomposition"
    checked = f"z^0..z^{order}"
    for i in range(order + 1):
        if lhs.coefficients[i] != rhs[i]:
            return VerificationReport(name, checked, Mismatch(f"z^{i}", rhs[i], lhs.coefficients[i]))
    return VerificationReport(name, checked)
