"""Antilog tables on a dyadic mantissa grid, and table-driven multiplication.

A level-n table holds base^(k/2^n) for every k in [0, 2^n): exactly the
classical table of mantissas, built as products of ladder rungs.  Only the
[0, 1) mantissa range is tabulated; whole powers of the base are supplied
by the characteristic at lookup time, which is why the table stays small
no matter how large the numbers being multiplied are.

The precision path of the library is the log engine; tables exist for the
lookup workflow and for export, so their level is capped at 16 (65,536
entries).
"""

import json
from dataclasses import dataclass

from ._backend import kernels
from .arith import int_pow
from .engine import LogValue, _floor, log_dyadic
from .errors import LevelOutOfRangeError, OutOfRangeError
from .ladder import RootLadder

MAX_TABLE_LEVEL = 16


def _dyadic_decimal(k: int, n: int) -> str:
    """Exact decimal string for k / 2^n (powers of two divide powers of ten)."""
    if k == 0:
        return "0"
    while n > 0 and k % 2 == 0:
        k //= 2
        n -= 1
    if n == 0:
        return str(k)
    p = 1
    for _ in range(n):
        p *= 5
    digits = str(k * p).rjust(n + 1, "0")
    return digits[:-n] + "." + digits[-n:]


@dataclass(frozen=True)
class LogTable:
    """Immutable antilog table: values[k] = base^(k / 2^level).

    ``built_from`` records the depth of the ladder the products came from.
    Values increase strictly with k and all lie in [1, base).
    """

    base: float
    level: int
    values: tuple[float, ...]
    built_from: int

    def __len__(self) -> int:
        return len(self.values)

    def mantissa_of(self, k: int) -> float:
        """Grid point k / 2^level as an exact float."""
        return k / float(1 << self.level)

    def entry(self, k: int) -> tuple[float, float]:
        """(mantissa exponent, antilog value) for row k."""
        return self.mantissa_of(k), self.values[k]

    def to_csv(self) -> str:
        """CSV rows: exact-decimal mantissa exponent, value to 12 digits."""
        lines = ["mantissa_exponent,value"]
        for k, v in enumerate(self.values):
            lines.append(f"{_dyadic_decimal(k, self.level)},{v:.12g}")
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        """JSON mirror of the table fields."""
        return json.dumps({
            "base": self.base,
            "level": self.level,
            "built_from": self.built_from,
            "entries": [
                {"mantissa_exponent": self.mantissa_of(k), "value": v}
                for k, v in enumerate(self.values)
            ],
        }, indent=2) + "\n"

    def to_gnuplot(self) -> str:
        """(value, mantissa) pairs: the log curve as plottable data."""
        lines = []
        for k, v in enumerate(self.values):
            lines.append(f"{v:.12g} {self.mantissa_of(k):.12g}")
        return "\n".join(lines) + "\n"


def build_table(ladder: RootLadder, level: int) -> LogTable:
    """Materialize the level-n antilog table from a ladder.

    Row k is the direct product of the rungs named by the bits of k, so
    every row carries only a few rounding units of error (nothing drifts
    along the table).
    """
    if not 0 <= level <= MAX_TABLE_LEVEL or level > ladder.depth:
        raise LevelOutOfRangeError(
            f"table level must be in [0, min({MAX_TABLE_LEVEL}, ladder depth "
            f"{ladder.depth})], got {level!r}")
    values = kernels.table_values(ladder.rungs, level)
    return LogTable(base=ladder.base, level=level, values=tuple(values),
                    built_from=ladder.depth)


def lookup_antilog(table: LogTable, mantissa: float) -> tuple[float, float]:
    """Nearest-grid-point antilog of a mantissa in [0, 1).

    No interpolation: the returned ``grid_error`` is the half grid width
    2^-(level+1), in log units, and is the honest price of pure lookup.
    Ties round toward the even grid index.
    """
    if not 0.0 <= mantissa < 1.0:
        raise OutOfRangeError(f"mantissa must lie in [0, 1), got {mantissa!r}")
    grid_error = 1.0 / (1 << (table.level + 1))
    k = round(mantissa * (1 << table.level))
    if k == 1 << table.level:  # nearest point is the top of the octave
        return table.base, grid_error
    return table.values[k], grid_error


@dataclass(frozen=True)
class MultiplyDetail:
    """Worked record of one multiplication through the table.

    ``log_sum`` is x1 + x2, split exactly into characteristic + mantissa;
    ``log_error_bound`` collects both log error bounds plus the lookup
    grid error, all in log units of the table base.
    """

    x1: LogValue
    x2: LogValue
    log_sum: float
    characteristic: int
    mantissa: float
    table_value: float
    grid_error: float
    log_error_bound: float


def multiply_via_logs(y1: float, y2: float, table: LogTable,
                      ladder: RootLadder) -> tuple[float, MultiplyDetail]:
    """Multiply two positive numbers by adding their logs.

    Take both logs on the ladder, add, split the sum into a whole
    characteristic and a [0, 1) mantissa, look the mantissa up in the
    table, and scale by the whole power of the base.  Returns the estimate
    and the full worked record.
    """
    x1 = log_dyadic(y1, ladder)
    x2 = log_dyadic(y2, ladder)
    log_sum = x1.value() + x2.value()
    c = _floor(log_sum)
    mantissa = log_sum - c
    value, grid_error = lookup_antilog(table, mantissa)
    if c >= 0:
        estimate = int_pow(ladder.base, c) * value
    else:
        estimate = value / int_pow(ladder.base, -c)
    detail = MultiplyDetail(
        x1=x1, x2=x2, log_sum=log_sum, characteristic=c, mantissa=mantissa,
        table_value=value, grid_error=grid_error,
        log_error_bound=x1.error_bound + x2.error_bound + grid_error)
    return estimate, detail
