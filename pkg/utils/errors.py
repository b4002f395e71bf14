"""Error hierarchy shared by the numerical modules and the command layer."""


class CasimirError(Exception):
    """Base class for every failure raised by this package."""


class DomainError(CasimirError, ValueError):
    """An argument lies outside the domain of the requested quantity."""


class ConvergenceError(CasimirError, ArithmeticError):
    """A root search, quadrature or series failed to meet its tolerance.

    ``where`` names the offending bracket, panel or grid point so the
    command layer can report it.
    """

    def __init__(self, message, where=None):
        super().__init__(message)
        self.where = where

    def __str__(self):
        base = super().__str__()
        if self.where is None:
            return base
        return f"{base} (at {self.where})"


# Process exit codes used by the command layer
EXIT_OK = 0
EXIT_INVALID = 1
EXIT_NONCONVERGENCE = 2
