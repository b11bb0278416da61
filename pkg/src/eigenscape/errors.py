"""Exception types shared across the package.

The CLI maps these onto exit codes; see ``eigenscape.cli``.
"""


class EigenscapeError(Exception):
    """Base class for all package errors."""


class ParameterError(EigenscapeError):
    """A scalar argument is out of its documented range."""


class InputError(EigenscapeError):
    """Malformed or inconsistent input data (shapes, symmetry, file content)."""


class DegeneracyError(EigenscapeError):
    """A degenerate configuration that has no meaningful answer.

    Examples: zero-degree vertex under the normalized Laplacian, zero
    denominator in a distance ratio.
    """


class ApplicabilityError(EigenscapeError):
    """A method's mathematical precondition is violated.

    Raised by the local-correlation oracle when the heat propagator does
    not conserve mass, since the identity it evaluates requires row sums
    equal to one.
    """


class NumericError(EigenscapeError):
    """Numerical failure (non-convergence, invalid intermediate values)."""
