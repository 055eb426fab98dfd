"""Square roots by divide-and-average, integer powers by squaring.

These two primitives are the entire arithmetic foundation: every other
module reaches irrational territory only through them.  The square-root
routine keeps its full iteration history so callers can display or audit
the convergence.
"""

from dataclasses import dataclass

from ._backend import kernels
from .errors import NoConvergenceError, NonPositiveInputError

DEFAULT_REL_TOL = 1e-13
DEFAULT_MAX_ITERATIONS = 64


def is_finite(v: float) -> bool:
    """True for ordinary floats; infinities and NaNs fail (v - v != 0)."""
    return v - v == 0.0


@dataclass(frozen=True)
class SqrtTrace:
    """Full history of one square-root computation.

    ``iterations`` holds the visited (x_k, y_k) pairs with y_k = input/x_k;
    each next x is the mean of the previous pair, and ``result`` is the
    mean of the last recorded pair.
    """

    input: float
    initial_guess: float
    iterations: tuple[tuple[float, float], ...]
    result: float
    converged: bool
    steps_used: int


def default_guess(x: float) -> float:
    """Digit-count starting guess: 10^ceil(d/2) for d-digit x, 1 below 1."""
    return kernels.default_guess(x)


def heron_sqrt(x: float,
               rel_tol: float = DEFAULT_REL_TOL,
               max_iterations: int = DEFAULT_MAX_ITERATIONS,
               initial_guess: float | None = None) -> SqrtTrace:
    """Square root of x by repeated divide-and-average.

    Starting from a guess g the iteration replaces g with the mean of g
    and x/g; it overshoots the root at most once and then descends onto it,
    roughly doubling the correct digits every step.  Convergence is declared
    when consecutive iterates agree to ``rel_tol`` relative, or coincide
    bit-for-bit (a one-ulp limit cycle is possible in float arithmetic).

    Raises NonPositiveInputError for x <= 0 or non-finite x, and
    NoConvergenceError if ``max_iterations`` runs out, which signals a
    pathological tolerance rather than anything expected for valid input.
    """
    if not (x > 0.0) or not is_finite(x):
        raise NonPositiveInputError(f"square root needs x > 0, got {x!r}")
    if not (0.0 < rel_tol < 1.0):
        raise NonPositiveInputError(f"rel_tol must be in (0, 1), got {rel_tol!r}")
    if max_iterations < 1:
        raise NonPositiveInputError("max_iterations must be at least 1")
    if initial_guess is None:
        initial_guess = kernels.default_guess(x)
    elif not (initial_guess > 0.0) or not is_finite(initial_guess):
        raise NonPositiveInputError(
            f"initial guess must be > 0, got {initial_guess!r}")

    pairs, result, converged = kernels.heron_pairs(
        float(x), float(initial_guess), rel_tol, max_iterations)
    if not converged:
        raise NoConvergenceError(
            f"square root of {x!r} did not meet rel_tol={rel_tol!r} "
            f"within {max_iterations} steps")
    return SqrtTrace(input=float(x), initial_guess=float(initial_guess),
                     iterations=tuple(pairs), result=result,
                     converged=True, steps_used=len(pairs))


def int_pow(b: float, m: int) -> float:
    """b multiplied by itself m times; int_pow(b, 0) == 1.

    Square-and-multiply keeps this at about 2*log2(m) multiplications.
    Raises OverflowError when the result leaves the finite float range.
    """
    if m < 0:
        raise NonPositiveInputError(f"exponent must be >= 0, got {m!r}")
    if not is_finite(b):
        raise NonPositiveInputError(f"base must be finite, got {b!r}")
    r = kernels.int_pow(float(b), m)
    if not is_finite(r):
        raise OverflowError(f"int_pow({b!r}, {m}) exceeds the float range")
    return r
