"""Named identity checks, each returning a :class:`VerificationReport`."""
from __future__ import annotations


from . import kernels
from .ballot import ballot_number, dyck_prefix_count, square_identity_sides
from .delannoy import central_series, legendre_sequence, recurrence_residual
from .errors import DomainError
from .exactnum import TruncatedSeries, series_mul
from .oracles import brute_force_ballot, brute_force_dyck_prefix
from .report import Mismatch, VerificationReport, compare_sequences
from .ruin import RuinSpec, duration_distribution, ruin_prob_binomial, ruin_prob_trig
from .walks import (
    schroeder_residual,
    schroeder_series,
    schroeder_series_from_counts,
    verify_bridge_decomposition,
)

TRIG_TOLERANCE = 1e-9


def verify_gf_central(order: int) -> VerificationReport:
    """1/sqrt(1-6z+z^2) against grid-DP d_n, and (1-6z+z^2) D(z)^2 = 1."""
    series = central_series(order)
    dp = kernels.central_grid(order)
    report = compare_sequences("gf-central", f"z^0..z^{order}", dp, list(series.coefficients), lambda i: f"z^{i}")
    if not report:
        return report
    # D^2 from the DP side so the check does not reuse the sqrt output
    d = TruncatedSeries(dp, order)
    product_ = series_mul(TruncatedSeries.from_polynomial([1, -6, 1], order), series_mul(d, d))
    one = [1] + [0] * order
    return compare_sequences("gf-central", f"z^0..z^{order}", one, list(product_.coefficients), lambda i: f"(1-6z+z^2)D^2 at z^{i}")


def verify_schroeder_algebraic(order: int) -> VerificationReport:
    """Excursion counts equal the radical series, and the DP series solves z^2 S^2 - (1-z^2) S + 1 = 0."""
    name, checked = "schroeder-algebraic", f"z^0..z^{order}"
    from_counts = schroeder_series_from_counts(order)
    from_radical = schroeder_series(order)
    report = compare_sequences(name, checked, list(from_radical.coefficients), list(from_counts.coefficients), lambda i: f"S coefficient z^{i}")
    if not report:
        return report
    residual = schroeder_residual(from_counts)
    return compare_sequences(name, checked, [0] * (order + 1), list(residual.coefficients), lambda i: f"residual z^{i}")


def verify_p_recurrence(order: int) -> VerificationReport:
    d = kernels.central_grid(order + 2)
    residuals = [recurrence_residual(d, n) for n in range(order + 1)]
    return compare_sequences("p-recurrence", f"n=0..{order}", [0] * (order + 1), residuals, lambda i: f"n={i}")


def verify_legendre(order: int) -> VerificationReport:
    return compare_sequences(
        "legendre", f"n=0..{order}", kernels.central_grid(order), legendre_sequence(order), lambda i: f"P_{i}(3)"
    )


def verify_square_range(order: int) -> VerificationReport:
    for p in range(order + 1):
        lhs, rhs = square_identity_sides(p)
        if lhs != rhs:
            return VerificationReport("square-identity", f"p=0..{order}", Mismatch(f"p={p}", rhs, lhs))
    return VerificationReport("square-identity", f"p=0..{order}")


def verify_ruin_agreement(order: int, n_max: int = 6) -> VerificationReport:
    """DP vs binomial (exact), trig (within 1e-9), parity zeros and mass balance for m <= order."""
    name = "ruin-agreement"
    checked = f"n=1..{n_max}, m<=" + str(order)
    worst = 0.0
    for n in range(1, n_max + 1):
        if order < n:
            continue
        dist = duration_distribution(n, order)
        if dist.total_mass != 1:
            return VerificationReport(name, checked, Mismatch(f"n={n} total mass", 1, dist.total_mass))
        for m in range(1, order + 1):
            spec = RuinSpec(n, m)
            exact = dist.prob(m)
            binom = ruin_prob_binomial(spec)
            if binom != exact:
                return VerificationReport(name, checked, Mismatch(f"n={n}, m={m} binomial", exact, binom))
            if not spec.reachable and exact != 0:
                return VerificationReport(name, checked, Mismatch(f"n={n}, m={m} parity", 0, exact))
            if dist.up.get(m, 0) != dist.down.get(m, 0):
                return VerificationReport(name, checked, Mismatch(f"n={n}, m={m} symmetry", dist.up.get(m), dist.down.get(m)))
            trig = ruin_prob_trig(spec)
            dev = abs(trig - float(exact))
            worst = max(worst, dev)
            if dev > TRIG_TOLERANCE:
                return VerificationReport(name, checked, Mismatch(f"n={n}, m={m} trig", float(exact), trig))
    return VerificationReport(name, checked, details=(f"max trig deviation {worst:.3e}",))


def verify_ballot_oracle(order: int, dyck_max: int | None = None) -> VerificationReport:
    """Ballot numbers for x <= y <= order and Dyck prefixes for n <= dyck_max against brute force."""
    name = "ballot-oracle"
    if dyck_max is None:
        dyck_max = 16
    checked = f"x<=y<={order}, n<={dyck_max}"
    for y in range(order + 1):
        for x in range(y + 1):
            want, got = brute_force_ballot(x, y), ballot_number(x, y)
            if want != got:
                return VerificationReport(name, checked, Mismatch(f"T({x},{y})", want, got))
    for n in range(dyck_max + 1):
        for k in range(n % 2, n + 1, 2):
            want, got = brute_force_dyck_prefix(n, k), dyck_prefix_count(n, k)
            if want != got:
                return VerificationReport(name, checked, Mismatch(f"dyck({n},{k})", want, got))
    return VerificationReport(name, checked)


IDENTITIES = {
    "gf-central": (verify_gf_central, 60),
    "schroeder-algebraic": (verify_schroeder_algebraic, 40),
    "bridge-decomposition": (verify_bridge_decomposition, 40),
    "p-recurrence": (verify_p_recurrence, 200),
    "legendre": (verify_legendre, 100),
    "square-identity": (verify_square_range, 200),
    "ruin-agreement": (verify_ruin_agreement, 60),
    "ballot-oracle": (verify_ballot_oracle, 10),
}


def run_identity(identity: str, order: int | None = None) -> VerificationReport:
    try:
        check, default = IDENTITIES[identity]
    except KeyError:
        raise DomainError(f"unknown identity {identity!r}; choose from {', '.join(IDENTITIES)}") from None
    if order is None:
        order = default
    if order < 0:
        raise DomainError(f"order must be >= 0, got {order}")
    return check(order)
