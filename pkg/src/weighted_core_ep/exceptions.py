"""Exception hierarchy and the mapping of exceptions to CLI exit codes."""

from enum import IntEnum


class WcepError(Exception):
    """Base class for every error raised by weighted-core-ep."""


class BackendMismatchError(WcepError, TypeError):
    """Exact and floating values were combined in one operation."""


class DimensionError(WcepError, ValueError):
    """Operands are not conformable, or a square matrix was required."""


class SingularMatrixError(WcepError, ValueError):
    """An inverse was requested for a singular matrix."""


class InvalidWeightError(WcepError, ValueError):
    """A weight matrix is not Hermitian and invertible."""


class MissingWeightError(WcepError, ValueError):
    """A weighted axiom was requested without its weight."""

    def __init__(self, axiom: str, weight: str) -> None:
        self.axiom = axiom
        self.weight = weight
        super().__init__(f"Axiom {axiom} needs weight {weight}")


class PreconditionError(WcepError, ValueError):
    """An operation was called outside its documented precondition."""


class MatrixFileError(WcepError, ValueError):
    """A matrix file could not be read or does not match its header."""


class ConstructionError(WcepError, RuntimeError):
    """A constructed inverse failed its own certificate.

    This signals a bug (or a float tolerance too tight for the input),
    never a user error.
    """


class ExitCode(IntEnum):
    """Stable exit codes of the ``wcep`` command."""

    OK = 0
    INTERNAL = 1
    INPUT_ERROR = 2
    INVALID_WEIGHT = 3
    NO_EXIST = 4
    VERIFICATION_FAILED = 5


def exit_code_for(exc: BaseException) -> ExitCode:
    """Map an exception to the exit code of the ``wcep`` command.

    More specific classes are matched first:
    1. InvalidWeightError → 3
    2. MatrixFileError, DimensionError, BackendMismatchError → 2
    3. PreconditionError, MissingWeightError → 2
    4. any other WcepError or exception → 1
    """
    if isinstance(exc, InvalidWeightError):
        return ExitCode.INVALID_WEIGHT
    if isinstance(
        exc, MatrixFileError | DimensionError | BackendMismatchError
    ):
        return ExitCode.INPUT_ERROR
    if isinstance(exc, PreconditionError | MissingWeightError):
        return ExitCode.INPUT_ERROR
    return ExitCode.INTERNAL
