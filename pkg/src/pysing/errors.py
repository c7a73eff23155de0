"""Exception hierarchy for pysing.

Every error raised by the library is a ``ValueError`` subclass carrying a
stable ``code`` string. The command line front end maps codes to exit codes.
"""
from typing import Any, Dict, List, Optional


class PysingError(ValueError):
    code = "PYSING_ERROR"

    def __init__(self, message: str, **details: Any):
        super().__init__(message)
        self.message = message
        self.details: Dict[str, Any] = details

    def to_dict(self) -> Dict[str, Any]:
        return {"code": self.code, "message": self.message}


class PolynomialSyntaxError(PysingError):
    code = "SYNTAX_ERROR"

    def __init__(self, message: str, text: str, position: int):
        super().__init__(f"{message} at position {position}: {text!r}")
        self.text = text
        self.position = position


class UnknownVariableError(PysingError):
    code = "UNKNOWN_VARIABLE"


class DegreeError(PysingError):
    code = "DEGREE_ERROR"


class MissingAssignmentError(PysingError):
    code = "MISSING_ASSIGNMENT"


class ZeroInputError(PysingError):
    code = "ZERO_INPUT"


class InvalidPointError(PysingError):
    code = "INVALID_POINT"


class NonRationalPointError(PysingError):
    code = "NON_RATIONAL_POINT"


class NotGroebnerError(PysingError):
    code = "NOT_GROEBNER"


class NonIsolatedError(PysingError):
    code = "NON_ISOLATED"


class GenericityError(PysingError):
    code = "GENERICITY_FAILURE"


class HilbertUnstableError(PysingError):
    code = "HILBERT_UNSTABLE"


class CommonComponentError(PysingError):
    code = "COMMON_COMPONENT"


class NonIsolatedFiberError(PysingError):
    code = "NON_ISOLATED_FIBER"


class HypothesisViolatedError(PysingError):
    code = "HYPOTHESIS_VIOLATED"


class NotFollowingError(PysingError):
    code = "NOT_FOLLOWING"


class InvalidSurfaceError(PysingError):
    code = "INVALID_SURFACE"


class EliminationNotPrincipalError(PysingError):
    code = "ELIMINATION_NOT_PRINCIPAL"


class SurfaceFileError(PysingError):
    code = "INVALID_INPUT"


class DegreeBoundExhaustedError(PysingError):
    """No verified mu-basis triple within the degree bound.

    ``candidates`` holds the lowest-degree generating set found so far and
    ``diagnostics`` the search statistics.
    """
    code = "DEGREE_BOUND_EXHAUSTED"

    def __init__(self, message: str, candidates: Optional[List[Any]] = None,
                 diagnostics: Optional[Dict[str, Any]] = None):
        super().__init__(message)
        self.candidates = list(candidates or [])
        self.diagnostics = dict(diagnostics or {})


# input problems -> 2, degenerate geometry -> 3, genericity and unstable fits -> 4
EXIT_CODES = {
    PolynomialSyntaxError.code: 2,
    UnknownVariableError.code: 2,
    InvalidSurfaceError.code: 2,
    InvalidPointError.code: 2,
    NonRationalPointError.code: 2,
    DegreeError.code: 2,
    MissingAssignmentError.code: 2,
    ZeroInputError.code: 2,
    SurfaceFileError.code: 2,
    NonIsolatedError.code: 3,
    NonIsolatedFiberError.code: 3,
    CommonComponentError.code: 3,
    EliminationNotPrincipalError.code: 3,
    GenericityError.code: 4,
    HilbertUnstableError.code: 4,
}


def exit_code_for(error: PysingError) -> int:
    return EXIT_CODES.get(error.code, 1)
