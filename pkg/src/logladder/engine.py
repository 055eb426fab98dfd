"""The log engine: log_b(y) and b^x on a dyadic exponent grid.

A logarithm here is a characteristic (whole power of the base) plus a
mantissa exponent k/2^depth found greedily: walk the ladder rungs from
coarse to fine and divide each one out of the residual whenever it fits.
After rung j the residual lies in [1, rungs[j]), so the finished mantissa
undershoots the true log by less than 2^-depth and never overshoots.

The antilog runs the same ladder in reverse: multiply together the rungs
named by the exponent's bits.
"""

from dataclasses import dataclass

from ._backend import kernels
from .arith import int_pow, is_finite
from .errors import (
    BadBaseError,
    CharacteristicOverflowError,
    DepthMismatchError,
    LevelOutOfRangeError,
    NonPositiveInputError,
)
from .ladder import MAX_DEPTH, RootLadder

# Whole powers of 10 stay comfortably finite in binary64 up to here; the
# normalization loop can never legitimately pass it for finite input.
MAX_CHARACTERISTIC = 400


@dataclass(frozen=True)
class DyadicExponent:
    """Exactly numerator / 2^level, stored in lowest terms.

    Construction reduces trailing factor-2 pairs, so the numerator is odd
    or zero (a zero value normalizes to level 0).  Exact comparisons and
    exact float conversion both follow from that canonical form.
    """

    numerator: int
    level: int

    def __post_init__(self):
        if not 0 <= self.level <= MAX_DEPTH:
            raise LevelOutOfRangeError(
                f"dyadic level must be in [0, {MAX_DEPTH}], got {self.level!r}")
        k, n = self.numerator, self.level
        if k == 0:
            n = 0
        else:
            while n > 0 and k % 2 == 0:
                k //= 2
                n -= 1
        object.__setattr__(self, "numerator", k)
        object.__setattr__(self, "level", n)

    def value(self) -> float:
        """Exact float value (division by a power of two is exact)."""
        return self.numerator / float(1 << self.level)


@dataclass(frozen=True)
class LogValue:
    """A computed logarithm: characteristic + dyadic mantissa exponent.

    ``value()`` is characteristic + mantissa; the true log of the input
    that produced this lies within ``error_bound`` above it.
    """

    base: float
    characteristic: int
    mantissa_exponent: DyadicExponent
    error_bound: float

    def __post_init__(self):
        m = self.mantissa_exponent.value()
        if not 0.0 <= m < 1.0:
            raise LevelOutOfRangeError(
                f"mantissa exponent must lie in [0, 1), got {m!r}")
        if not 0.0 < self.error_bound <= 1.0 / (1 << self.mantissa_exponent.level):
            raise LevelOutOfRangeError(
                f"error bound {self.error_bound!r} inconsistent with level "
                f"{self.mantissa_exponent.level}")

    def value(self) -> float:
        return self.characteristic + self.mantissa_exponent.value()


def _floor(x: float) -> int:
    c = int(x)
    if c > x:
        c -= 1
    return c


def log_dyadic(y: float, ladder: RootLadder) -> LogValue:
    """log of y in the ladder's base, resolved to 2^-depth.

    Any positive finite y is accepted; values outside [1, base) are first
    scaled by whole powers of the base (that scaling is the characteristic,
    so the mantissa always lands in [0, 1)).  Zero and negative inputs are
    rejected: their logarithms do not exist in the real numbers this
    library lives in.
    """
    y = float(y)
    if not (y > 0.0) or not is_finite(y):
        raise NonPositiveInputError(
            f"logarithm needs a positive finite number, got {y!r}")
    c, k, _residual = kernels.log_split(y, ladder.base, ladder.rungs)
    if abs(c) > MAX_CHARACTERISTIC:
        raise CharacteristicOverflowError(
            f"characteristic {c} outside +/-{MAX_CHARACTERISTIC}")
    return LogValue(base=ladder.base, characteristic=int(c),
                    mantissa_exponent=DyadicExponent(int(k), ladder.depth),
                    error_bound=1.0 / (1 << ladder.depth))


def antilog_dyadic(x: "LogValue | float", ladder: RootLadder) -> float:
    """base^x from the ladder: whole power times a product of rungs.

    LogValue inputs are honored exactly at their own level (which must not
    be finer than the ladder).  Plain reals are rounded to the nearest
    point of the 2^-depth grid, ties toward the even numerator.
    """
    if isinstance(x, LogValue):
        if x.base != ladder.base:
            raise BadBaseError(
                f"exponent is base {x.base!r} but ladder is base {ladder.base!r}")
        m = x.mantissa_exponent
        if m.level > ladder.depth:
            raise DepthMismatchError(
                f"exponent level {m.level} exceeds ladder depth {ladder.depth}")
        if abs(x.value()) > MAX_CHARACTERISTIC + 1:
            raise CharacteristicOverflowError(f"antilog of {x.value()!r} overflows")
        c = x.characteristic
        k, level = m.numerator, m.level
    else:
        x = float(x)
        if not is_finite(x) or abs(x) > MAX_CHARACTERISTIC:
            raise CharacteristicOverflowError(
                f"antilog exponent must lie in +/-{MAX_CHARACTERISTIC}, got {x!r}")
        c = _floor(x)
        k = round((x - c) * (1 << ladder.depth))
        level = ladder.depth
        if k == 1 << ladder.depth:
            c += 1
            k = 0
    v = kernels.mantissa_product(k, level, ladder.rungs)
    if c >= 0:
        return int_pow(ladder.base, c) * v
    return v / int_pow(ladder.base, -c)


def convert_base(x: LogValue, new_base: float, ladder_q: RootLadder) -> float:
    """Rebase a logarithm: log_p(y) = log_q(y) / log_q(p).

    ``x`` must have been computed on ``ladder_q``'s base q; the divisor
    log_q(p) is computed on the same ladder, so no base-p ladder is needed.
    """
    if x.base != ladder_q.base:
        raise BadBaseError(
            f"value is base {x.base!r} but ladder is base {ladder_q.base!r}")
    if not (new_base > 1.0) or not is_finite(new_base):
        raise BadBaseError(f"target base must be finite and > 1, got {new_base!r}")
    return x.value() / log_dyadic(new_base, ladder_q).value()


def log_product_check(y1: float, y2: float,
                      ladder: RootLadder) -> tuple[float, float]:
    """Both sides of the product law: (log(y1*y2), log(y1) + log(y2)).

    The two returns agree to a few grid steps; the gap is the quantization
    of three independent greedy extractions, not a property of the law.
    """
    y1, y2 = float(y1), float(y2)
    if not is_finite(y1 * y2):
        raise CharacteristicOverflowError(
            f"product {y1!r} * {y2!r} is not finite")
    lhs = log_dyadic(y1 * y2, ladder).value()
    rhs = log_dyadic(y1, ladder).value() + log_dyadic(y2, ladder).value()
    return lhs, rhs
