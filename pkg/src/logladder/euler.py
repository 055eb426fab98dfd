"""Finding e from the slope of the base-10 log curve.

The slope of log10 at x is the limit of log10(1 + eps/x) / eps.  Choosing
1 + eps/x to be a ladder rung makes the numerator exactly 2^-n with no
logarithm evaluation at all, so the only error left is the grid spacing.
The slope at x = 1 tends to a constant t_n -> 0.4342944... whose antilog
is the special base e, where the slope law collapses to exactly 1/x.

ln(x) is also the area under 1/t from 1 to x; ``riemann_ln`` checks that
numerically with nothing but arithmetic.
"""

from dataclasses import dataclass

from ._backend import kernels
from .arith import is_finite
from .engine import antilog_dyadic, log_dyadic
from .errors import (
    BadBaseError,
    LevelOutOfRangeError,
    NonPositiveInputError,
    OutOfRangeError,
)
from .ladder import RootLadder, rung_epsilon

# Below n = 4 the rung is nowhere near 1 and the "slope" reads nothing.
MIN_SLOPE_LEVEL = 4
MIN_E_LEVEL = 10


@dataclass(frozen=True)
class SlopeEstimate:
    """One finite-difference reading of the log10 curve's slope at x.

    epsilon is x * (rungs[n] - 1), so 1 + epsilon/x is exactly the rung
    and the rise over the step is exactly 2^-n; slope is their ratio.
    """

    base: float
    x: float
    ladder_level: int
    epsilon: float
    slope: float


def _check_level(n: int, ladder: RootLadder, minimum: int) -> None:
    if ladder.base != 10.0:
        raise BadBaseError(
            f"slope readings need a base-10 ladder, got base {ladder.base!r}")
    if not minimum <= n <= ladder.depth:
        raise LevelOutOfRangeError(
            f"level must be in [{minimum}, {ladder.depth}], got {n!r}")


def slope_log10(x: float, n: int, ladder10: RootLadder) -> SlopeEstimate:
    """Slope of log10 at x, read off rung n of the base-10 ladder."""
    x = float(x)
    if not (x > 0.0) or not is_finite(x):
        raise NonPositiveInputError(f"slope point must be > 0, got {x!r}")
    _check_level(n, ladder10, MIN_SLOPE_LEVEL)
    eps = x * rung_epsilon(ladder10, n)
    slope = (1.0 / (1 << n)) / eps
    return SlopeEstimate(base=10.0, x=x, ladder_level=n,
                         epsilon=eps, slope=slope)


def limit_sequence(n_max: int,
                   ladder10: RootLadder) -> list[tuple[int, float]]:
    """t_n = 1 / (2^n * (rungs[n] - 1)) for n = 4..n_max.

    The sequence climbs monotonically toward log10(e); each term is the
    slope reading at x = 1 for that rung.
    """
    _check_level(n_max, ladder10, MIN_SLOPE_LEVEL)
    out = []
    for n in range(MIN_SLOPE_LEVEL, n_max + 1):
        out.append((n, 1.0 / ((1 << n) * rung_epsilon(ladder10, n))))
    return out


def discover_e(n: int, ladder10: RootLadder) -> float:
    """The antilog of the measured slope at x = 1: an estimate of e.

    Larger n reads the slope closer to the curve and the estimate
    sharpens; n = 20 already gives 2.718.
    """
    _check_level(n, ladder10, MIN_E_LEVEL)
    t = 1.0 / ((1 << n) * rung_epsilon(ladder10, n))
    return antilog_dyadic(t, ladder10)


def slope_log_p(p: float, x: float, n: int, ladder10: RootLadder) -> float:
    """Slope of log_p at x: the base-10 reading divided by log10(p).

    When p is (an estimate of) e the result is 1/x, which is what makes
    e worth a name.
    """
    if not (p > 1.0) or not is_finite(p):
        raise BadBaseError(f"slope base must be finite and > 1, got {p!r}")
    reading = slope_log10(x, n, ladder10)
    return reading.slope / log_dyadic(p, ladder10).value()


def riemann_ln(x: float, steps: int) -> float:
    """Area under 1/t from 1 to x by the trapezoid rule.

    Converges to ln(x) as steps^-2; only +, -, *, / are used.  Defined
    here for x >= 1 only.
    """
    x = float(x)
    if not is_finite(x) or x < 1.0:
        raise OutOfRangeError(f"area is defined for x >= 1, got {x!r}")
    if steps < 16:
        raise OutOfRangeError(f"need at least 16 steps, got {steps!r}")
    return kernels.trapezoid_recip(x, steps)
