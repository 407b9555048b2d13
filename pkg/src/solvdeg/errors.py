"""Exception hierarchy shared by all modules."""


class SolvdegError(Exception):
    """Base class for every error raised by the package."""

    exit_code = 1


class DimensionError(SolvdegError, ValueError):
    """Monomials or polynomials with mismatched variable counts."""

    exit_code = 2


class RingMismatchError(SolvdegError, ValueError):
    """Arithmetic between polynomials of different rings."""

    exit_code = 2


class ZeroPolynomialError(SolvdegError, ValueError):
    """An operation that needs a nonzero polynomial received zero."""

    exit_code = 2


class PreconditionError(SolvdegError, ValueError):
    """A documented precondition of an operation does not hold."""

    exit_code = 2


class NotUniqueSolutionError(PreconditionError):
    pass


class NormalPositionError(PreconditionError):
    pass


class DregUndefinedError(PreconditionError):
    """The quotient by the top-degree ideal is not eventually zero."""


class DegreeCapError(SolvdegError, RuntimeError):
    """The Macaulay loop exceeded its degree cap without finding a basis."""

    exit_code = 3


class ParseError(SolvdegError, ValueError):
    """Malformed system file; carries the offending line number."""

    exit_code = 4

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class NonPrimeModulusError(ParseError):
    pass


class UnknownVariableError(ParseError):
    pass


class EmptySystemError(ParseError):
    pass
