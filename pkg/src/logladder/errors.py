"""Exception types raised by the library.

Everything derives from ``LogLadderError`` so callers (and the CLI) can
catch domain failures in one clause.  Usage mistakes that Python itself
would classify differently keep their builtin parents too.
"""


class LogLadderError(Exception):
    """Base class for all library errors."""


class NonPositiveInputError(LogLadderError, ValueError):
    """Input must be a positive finite number."""


class NoConvergenceError(LogLadderError, ArithmeticError):
    """Iteration exhausted its step budget before meeting tolerance."""


class BadBaseError(LogLadderError, ValueError):
    """Logarithm bases must be finite and greater than 1."""


class DepthOutOfRangeError(LogLadderError, ValueError):
    """Ladder depth outside the supported range."""


class LevelOutOfRangeError(LogLadderError, ValueError):
    """Dyadic level outside the supported range."""


class IndexOutOfRangeError(LogLadderError, IndexError):
    """Rung index outside the ladder."""


class DepthMismatchError(LogLadderError, ValueError):
    """Exponent carries finer dyadic resolution than the ladder provides."""


class CharacteristicOverflowError(LogLadderError, OverflowError):
    """Characteristic outside the range the float format can honor."""


class BadRadixError(LogLadderError, ValueError):
    """Numeral base outside [2, 36]."""


class DigitOutOfRangeError(LogLadderError, ValueError):
    """Digit not valid for the numeral's base."""


class OutOfRangeError(LogLadderError, ValueError):
    """Argument outside the documented domain."""
