"""Exact cardinal B-spline arithmetic and the descent combinatorics it encodes.

Every quantity is computed over arbitrary-precision rationals by several
independent routes (spline evaluation, explicit alternating sums,
recurrences, coefficient extraction, brute-force enumeration) which are
required to agree bit-exactly, with Monte Carlo volume experiments as the
geometric witness.
"""

from .descent import (
    DescentTable,
    IndexedPermutation,
    descent_explicit,
    descent_recurrence_table,
    descent_spline,
    descent_table,
    descent_two_scale_residual,
    descent_via_refined,
    indexed_bruteforce,
    log_concavity_verdict,
)
from .errors import (
    DuplicateNode,
    IndexOutOfSupport,
    NegativeResult,
    NonIntegerResult,
    SplinecombError,
    TooLarge,
)
from .eulerian import (
    EulerianRow,
    RefinedTriangle,
    eulerian_bruteforce,
    eulerian_row_spline,
    eulerian_spline,
    eulerian_two_scale_residual,
    refined_bruteforce,
    refined_explicit,
    refined_lambda_extraction,
    refined_triangle,
)
from .geometry import SliceSpec, VolumeEstimate, mc_volume, minkowski_poly, mixed_volume
from .numcore import (
    Natural,
    Rational,
    binomial,
    factorial,
    format_rational,
    int_pow,
    parse_rational,
    truncated_pow,
)
from .polyring import Polynomial, interpolate
from .splinecore import (
    PiecePoly,
    bspline_eval_explicit,
    bspline_eval_recurrence,
    bspline_integrate,
    bspline_piece,
    log_concavity_witness,
    partition_residual,
    two_scale_residual,
)
from .verify import VerifyConfig, VerifyReport, verify_all

__version__ = "0.1.0"
