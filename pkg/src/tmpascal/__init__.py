"""Exact arithmetic for the parity-sign recurrence triangle and the
piecewise-linear interpolants it generates, with machine checks of every
structural property and of the half-argument integral equation they solve
in the limit.
"""

from .approximant import (
    IntervalEstimate,
    PiecewiseLinearApproximant,
    SequenceState,
    enclose_limit,
    eval_at,
    limit_at_integer,
    node_value,
    shift_operator,
    shift_orbit,
)
from .cache import RowCache
from .dyadic import Dyadic
from .errors import CacheIntegrityError, EvaluationRangeError, ResourceBudgetError
from .report import VerificationReport
from .seqcore import sturmian_increment, sturmian_letter, thue_morse, thue_morse_prefix
from .triangle import (
    CoefficientRow,
    InitSpec,
    TriangleTable,
    boundedness_probe,
    build_triangle,
    central_value,
    check_bounds_and_symmetry,
    check_factorization,
    check_growth,
    coefficient_row,
    parity_init,
    scale_exponent,
    sturmian_init,
    triangle_row,
    zero_init,
)
from .verify import (
    ResidualRecord,
    exact_integral,
    integer_value_suite,
    interpolant_property_suite,
    operator_match_suite,
    residual,
    residual_scan,
    residual_suite,
)

__version__ = "0.1.0"

__all__ = [
    "CacheIntegrityError",
    "CoefficientRow",
    "Dyadic",
    "EvaluationRangeError",
    "IntervalEstimate",
    "InitSpec",
    "PiecewiseLinearApproximant",
    "ResidualRecord",
    "ResourceBudgetError",
    "RowCache",
    "SequenceState",
    "TriangleTable",
    "VerificationReport",
    "boundedness_probe",
    "build_triangle",
    "central_value",
    "check_bounds_and_symmetry",
    "check_factorization",
    "check_growth",
    "coefficient_row",
    "enclose_limit",
    "eval_at",
    "exact_integral",
    "integer_value_suite",
    "interpolant_property_suite",
    "limit_at_integer",
    "node_value",
    "operator_match_suite",
    "parity_init",
    "residual",
    "residual_scan",
    "residual_suite",
    "scale_exponent",
    "shift_operator",
    "shift_orbit",
    "sturmian_increment",
    "sturmian_init",
    "sturmian_letter",
    "thue_morse",
    "thue_morse_prefix",
    "triangle_row",
    "zero_init",
]
