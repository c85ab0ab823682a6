"""Custom exception classes for the Leech (co)homology toolkit."""

from typing import Any, Optional, Sequence


class LeechError(Exception):
    """Base class for every error raised by the toolkit."""

    # process exit code used by the CLI when this error escapes a command
    exit_code: int = 1

    def __init__(self, detail: str):
        super().__init__(detail)
        self.detail = detail


class DimensionMismatchError(LeechError):
    """Exception raised when matrix or group shapes do not line up."""

    def __init__(self, operation: str, expected: Any, got: Any):
        super().__init__(
            f"{operation}: dimension mismatch (expected {expected}, got {got})"
        )


class InvalidGroupError(LeechError):
    """Exception raised when invariant factors do not form a divisibility chain."""

    def __init__(self, torsion: Sequence[int], reason: str):
        super().__init__(f"Invalid abelian group torsion {list(torsion)}: {reason}")


class IllDefinedHomError(LeechError):
    """Exception raised when a matrix does not define a homomorphism."""

    def __init__(self, row: int, col: int, reason: str):
        super().__init__(f"Ill-defined homomorphism at entry ({row}, {col}): {reason}")


class CompositionNotZeroError(LeechError):
    """Exception raised when g∘f is required to vanish but does not."""

    def __init__(self, context: str = "subquotient"):
        super().__init__(f"{context}: composite of consecutive maps is not zero")


class InvalidMonoidError(LeechError):
    """Exception raised for index/period pairs outside the standing assumptions."""

    def __init__(self, index: int, period: int):
        super().__init__(
            f"C_(m={index}, q={period}) is not allowed: need m >= 0, q >= 1 and m + q >= 2"
        )


class NotComposableError(LeechError):
    """Exception raised when two arrows of the factorization category do not compose."""

    def __init__(self, g: Any, f: Any):
        super().__init__(f"Arrow {g} cannot be composed after {f}")


class XMustBePositiveError(LeechError):
    """Exception raised when a trace map is requested at the element 0."""

    def __init__(self, x: int):
        super().__init__(f"Trace map needs an element x >= 1, got {x}")


class WrongSideError(LeechError):
    """Exception raised when a left module is passed where a right one is needed, or back."""

    def __init__(self, expected: str, got: str):
        super().__init__(f"Expected a {expected} module, got a {got} module")


class ActionViolatesCongruenceError(LeechError):
    """Exception raised when an ordinary action does not factor through C_(m,q)."""

    def __init__(self, index: int, period: int):
        super().__init__(
            f"Action P does not satisfy P^{index}(P^{period} - I) = 0"
        )


class NotOrdinaryError(LeechError):
    """Exception raised when a module is not constant on objects with one trivial side."""

    def __init__(self, reason: str):
        super().__init__(f"Module is not an ordinary (Eilenberg-Mac Lane) module: {reason}")


class NotSymmetricError(LeechError):
    """Exception raised when 1_* and 1^* differ somewhere."""

    def __init__(self, element: int):
        super().__init__(f"Module is not symmetric: 1_* != 1^* at element {element}")


class SpotOutOfRangeError(LeechError):
    """Exception raised when homology is asked at a spot the complex does not cover."""

    def __init__(self, spot: int, length: int):
        super().__init__(f"Spot {spot} is outside the built complex (spots 0..{length - 1})")


class ModuleFileError(LeechError):
    """Exception raised when a module file cannot be read or does not match the schema."""

    exit_code = 2

    def __init__(self, source: str, reason: str):
        super().__init__(f"Cannot load module from {source}: {reason}")


class FlagError(LeechError):
    """Exception raised for malformed or conflicting command-line options."""

    exit_code = 2

    def __init__(self, reason: str):
        super().__init__(f"Bad options: {reason}")


class ModuleValidationError(LeechError):
    """Exception raised when a module fails the axioms where a lawful one is required."""

    exit_code = 3

    def __init__(self, report: Optional[Any] = None, reason: str = "module axioms violated"):
        first = ""
        if report is not None and getattr(report, "violations", None):
            first = f" (first: {report.violations[0].describe()})"
        super().__init__(f"{reason}{first}")
        self.report = report


class OracleMismatchError(LeechError):
    """Exception raised when the closed form disagrees with the oracle complex."""

    exit_code = 4

    def __init__(self, degree: Optional[int], detail: str):
        where = f" at degree {degree}" if degree is not None else ""
        super().__init__(f"Closed form and oracle disagree{where}: {detail}")
