"""Logarithms rebuilt from the four elementary arithmetic operations.

Square roots come from divide-and-average iteration, logarithms from a
greedy walk over a ladder of repeated square roots of the base, antilogs
from products of those same rungs, and the constant e from the slope of
the log curve measured on the ladder grid.  No transcendental or
square-root intrinsic is used anywhere outside the test oracles.

The hot kernels run from a compiled extension when available and from a
bit-identical pure-Python fallback otherwise; see ``backend_name``.
"""

from ._backend import backend_name
from .arith import SqrtTrace, default_guess, heron_sqrt, int_pow
from .engine import (
    DyadicExponent,
    LogValue,
    antilog_dyadic,
    convert_base,
    log_dyadic,
    log_product_check,
)
from .euler import (
    SlopeEstimate,
    discover_e,
    limit_sequence,
    riemann_ln,
    slope_log10,
    slope_log_p,
)
from .ladder import (
    DEFAULT_DEPTH,
    MAX_DEPTH,
    RootLadder,
    build_ladder,
    rung_epsilon,
)
from .radix import RadixNumeral, fractional_digits, from_radix, to_radix
from .tables import (
    LogTable,
    MultiplyDetail,
    build_table,
    lookup_antilog,
    multiply_via_logs,
)

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_DEPTH",
    "DyadicExponent",
    "LogTable",
    "LogValue",
    "MAX_DEPTH",
    "MultiplyDetail",
    "RadixNumeral",
    "RootLadder",
    "SlopeEstimate",
    "SqrtTrace",
    "antilog_dyadic",
    "backend_name",
    "build_ladder",
    "build_table",
    "convert_base",
    "default_guess",
    "discover_e",
    "fractional_digits",
    "from_radix",
    "heron_sqrt",
    "int_pow",
    "limit_sequence",
    "log_dyadic",
    "log_product_check",
    "lookup_antilog",
    "multiply_via_logs",
    "riemann_ln",
    "rung_epsilon",
    "slope_log10",
    "slope_log_p",
    "to_radix",
]
