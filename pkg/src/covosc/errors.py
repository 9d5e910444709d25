"""Exception types shared by every module.

The CLI maps them onto exit codes: ``DomainError`` and ``RangeError`` exit 2,
``NumericError`` exits 1 through the validation path.
"""


class CovoscError(Exception):
    """Base class for library errors."""


class DomainError(CovoscError, ValueError):
    """An argument lies outside the domain an operation is defined on."""


class RangeError(CovoscError, ValueError):
    """A parameter is so large that results would under- or overflow."""


class NumericError(CovoscError, ArithmeticError):
    """A numerical procedure produced non-finite values or did not converge."""
