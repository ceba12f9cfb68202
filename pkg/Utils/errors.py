class ElfError(Exception):
    r"""Base class of every error raised by the library.
    """


class ArgumentError(ElfError, ValueError):
    pass


class CapacityError(ElfError, ValueError):
    pass


class DomainError(ElfError, ValueError):
    pass


class NumericError(ElfError, ArithmeticError):
    r"""Numerical procedure did not reach its tolerance.

    ``residual`` holds the last error estimate (or condition estimate).
    """
    def __init__(self, message, residual=None):
        super(NumericError, self).__init__(message)
        self.residual = residual


class UnresolvedLimitError(NumericError):
    pass


class InvariantViolation(ElfError, ArithmeticError):
    pass
