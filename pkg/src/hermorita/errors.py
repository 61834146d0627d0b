"""Exception hierarchy.

Everything raised for a mathematical reason derives from :class:`MathError`,
which the command line maps to its own exit status.
"""


class HermoritaError(Exception):
    pass


class ParseError(HermoritaError, ValueError):
    """A form file or textual value could not be decoded."""


class MathError(HermoritaError):
    pass


class DivisionByZero(MathError, ZeroDivisionError):
    pass


class NotDivision(MathError):
    """A nonzero element with zero reduced norm was inverted.

    The algebra parameters describe a split algebra (at least on this
    element), so it is not a division algebra.
    """


class DescriptorMismatch(MathError, TypeError):
    pass


class ShapeMismatch(MathError, ValueError):
    pass


class IndexOutOfRange(MathError, IndexError):
    pass


class Singular(MathError):
    pass


class NotEpsilonHermitian(MathError):
    pass


class SideMismatch(MathError):
    pass


class EpsilonMismatch(MathError):
    pass


class InconsistentEvaluator(MathError):
    """A probe disagrees with the sesquilinear structure of the evaluator."""


class InvariantViolation(HermoritaError, AssertionError):
    pass
