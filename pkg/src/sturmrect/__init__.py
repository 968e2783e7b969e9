"""Balanced rectangles in Sturmian words, decided exactly.

The package computes rectangle weights of Sturmian words, decides their
balancedness from Ostrowski digits, and checks that verdict against an
exact point-counting oracle on the torus.  All comparisons with alpha are
exact integer sign tests against continued-fraction convergents.
"""

from . import kernels
from .charact import BalanceVerdict, CaseTag, XStarShape, classify_xstar_shape, decide
from .errors import (
    AlphaSpecError,
    AmbiguousShift,
    DistanceCollision,
    EmptyQuotients,
    IndexOutOfRange,
    InsufficientDepth,
    InvalidA,
    InvalidDigits,
    NonPositiveQuotient,
    SturmRectError,
    ValueTooLargeForDepth,
    ZeroHasNoDigits,
)
from .exactalpha import (
    PRESETS,
    ContinuedFraction,
    LinearForm,
    Side,
    compare_rational,
    delta,
    dist_nearest,
    floor_mul,
    frac_mul,
    lf_compare,
    lf_sign,
    new_cf,
    parse_alpha,
    semiconvergent_den,
    side_abs,
)
from .ostrowski import OstrowskiRep, decode, digit, encode, high_part, k0, k_geq, low_part, top_index, validate
from .torus import (
    IntervalBalanceVerdict,
    TorusPointSet,
    count_in_interval,
    discrepancy_check,
    f_map,
    interval_balance_oracle,
    is_bijective_f,
    points_of_alpha,
    shift_check,
    x_func,
    x_star,
)
from .words import FloorTable, WeightScanReport, factor_weight, indicator_sum, prefix, rect_weight, symbol, window_scan

__version__ = "0.1.0"
