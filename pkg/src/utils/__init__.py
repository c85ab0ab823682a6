"""Utility modules shared across the toolkit."""

from .exceptions import (
    ActionViolatesCongruenceError,
    CompositionNotZeroError,
    DimensionMismatchError,
    FlagError,
    IllDefinedHomError,
    InvalidGroupError,
    InvalidMonoidError,
    LeechError,
    ModuleFileError,
    ModuleValidationError,
    NotComposableError,
    NotOrdinaryError,
    NotSymmetricError,
    OracleMismatchError,
    SpotOutOfRangeError,
    WrongSideError,
    XMustBePositiveError,
)
from .timing import measure_time

__all__ = [
    "measure_time",
    "ActionViolatesCongruenceError",
    "CompositionNotZeroError",
    "DimensionMismatchError",
    "FlagError",
    "IllDefinedHomError",
    "InvalidGroupError",
    "InvalidMonoidError",
    "LeechError",
    "ModuleFileError",
    "ModuleValidationError",
    "NotComposableError",
    "NotOrdinaryError",
    "NotSymmetricError",
    "OracleMismatchError",
    "SpotOutOfRangeError",
    "WrongSideError",
    "XMustBePositiveError",
]
