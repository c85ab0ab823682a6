"""
Tests for shared utilities: timing and the error hierarchy.
"""

import time

import pytest

from src.models import ValidationReport
from src.utils import (
    FlagError,
    LeechError,
    ModuleFileError,
    ModuleValidationError,
    OracleMismatchError,
    WrongSideError,
    measure_time,
)


def test_measure_time():
    with measure_time() as elapsed:
        time.sleep(0.01)
    assert elapsed() >= 10
    assert isinstance(elapsed(), int)


@pytest.mark.parametrize(
    "error,code",
    [
        (FlagError("bad"), 2),
        (ModuleFileError("x.json", "missing"), 2),
        (ModuleValidationError(), 3),
        (OracleMismatchError(2, "Z vs 0"), 4),
        (WrongSideError("left", "right"), 1),
    ],
)
def test_exit_codes(error, code):
    assert isinstance(error, LeechError)
    assert error.exit_code == code


def test_error_messages():
    assert str(OracleMismatchError(3, "Z/2 vs 0")) == (
        "Closed form and oracle disagree at degree 3: Z/2 vs 0"
    )
    assert str(OracleMismatchError(None, "shape")) == "Closed form and oracle disagree: shape"
    assert "x.json" in str(ModuleFileError("x.json", "missing"))


def test_validation_error_carries_the_report():
    report = ValidationReport(name="axioms")
    report.record(False, "B", 2, "1_* and 1^* do not commute")
    error = ModuleValidationError(report)
    assert error.report is report
    assert "[B] at element 2" in str(error)
