"""Exact lattice-path enumeration: Delannoy, Schroeder, ballot and ruin counts."""
from .ballot import ballot_number, dyck_prefix_count, verify_square_identity
from .delannoy import (
    CentralAlgorithm,
    DelannoyTable,
    central_delannoy,
    central_sequence,
    delannoy_binomial,
    delannoy_count_by_length,
    delannoy_table,
    legendre_at_3,
)
from .exactnum import TruncatedSeries, series_add, series_coeff, series_div, series_mul, series_sqrt
from .kernels import BACKEND
from .report import VerificationReport
from .ruin import (
    DurationDistribution,
    RuinSpec,
    duration_distribution,
    expected_abs_lead,
    ruin_prob_binomial,
    ruin_prob_dp,
    ruin_prob_trig,
)
from .walks import (
    Jump,
    JumpSystem,
    PathClass,
    StripBounds,
    count_paths,
    meander_end_profile,
    schroeder_numbers,
    verify_bridge_decomposition,
)

__version__ = "0.1.0"
