"""Exception types shared across the package.

The CLI maps these onto exit codes, so library code should raise the
most specific one that applies:

* ParseError      - bad expression text or a denominator outside the
                    supported class (exit code 2)
* MathError       - a violated mathematical precondition, e.g. a
                    non-symmetric input or a specialization hitting a
                    pole (exit code 3)
* InternalError   - a guard that should be unreachable for valid
                    inputs; seeing one is a bug or a budget blowout
                    (exit code 4)
"""


class RsfError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(RsfError):
    pass


class MathError(RsfError):
    pass


class InternalError(RsfError):
    pass


class NotDivisibleError(MathError):
    """Exact division was requested but the divisor does not divide."""
