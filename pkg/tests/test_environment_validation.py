"""
Tests for environment variable validation at startup.
"""

import os
import subprocess
import sys
import tempfile
from unittest.mock import patch

import pytest

from src.cli import _validate_environment, app


def test_log_file_validation_valid():
    """Test that valid log file path passes validation."""
    with tempfile.NamedTemporaryFile(delete=False) as temp_file:
        temp_path = temp_file.name

    try:
        with patch.dict(os.environ, {"LOG_FILE": temp_path, "LOG_LEVEL": "1"}):
            # Should not raise SystemExit
            _validate_environment()
    finally:
        os.unlink(temp_path)


def test_log_file_validation_invalid_path():
    """Test that invalid log file path causes exit(1)."""
    invalid_path = "/nonexistent/directory/that/cannot/be/created/log.txt"

    with patch.dict(os.environ, {"LOG_FILE": invalid_path}):
        with pytest.raises(SystemExit) as exc_info:
            _validate_environment()
        assert exc_info.value.code == 1


def test_log_file_validation_not_provided():
    """Test that missing log file passes validation (uses stderr)."""
    with patch.dict(os.environ, {}, clear=True):
        _validate_environment()


def test_log_level_validation_valid():
    """Test valid LOG_LEVEL values."""
    for level in ("0", "1", "2"):
        with patch.dict(os.environ, {"LOG_LEVEL": level}):
            _validate_environment()


@pytest.mark.parametrize("level", ["3", "-1", "invalid"])
def test_log_level_validation_invalid(level):
    """Test invalid LOG_LEVEL values."""
    with patch.dict(os.environ, {"LOG_LEVEL": level}):
        with pytest.raises(SystemExit) as exc_info:
            _validate_environment()
        assert exc_info.value.code == 1


def test_max_degree_default_from_environment():
    """LEECH_MAX_DEGREE_DEFAULT overrides the YAML value."""
    with patch.dict(os.environ, {"LEECH_MAX_DEGREE_DEFAULT": "3"}):
        settings = _validate_environment()
        assert settings.max_degree_default == 3


@pytest.mark.parametrize("raw", ["", "abc", "0", "-4"])
def test_max_degree_default_falls_back(raw):
    """Unusable LEECH_MAX_DEGREE_DEFAULT values keep the configured default."""
    with patch.dict(os.environ, {"LEECH_MAX_DEGREE_DEFAULT": raw}):
        settings = _validate_environment()
        assert settings.max_degree_default == int(settings.config["max_degree"])


def test_cli_command_validation():
    """Test that CLI commands validate environment variables."""
    with patch.dict(os.environ, {"LOG_LEVEL": "9"}):
        with pytest.raises(SystemExit) as exc_info:
            app(["builtin", "-m", "1", "-q", "2"])
        assert exc_info.value.code == 1

    with patch.dict(os.environ, {"LOG_FILE": "/nonexistent/path/log.txt"}):
        with pytest.raises(SystemExit) as exc_info:
            app(["resolution-check", "-m", "1", "-q", "2"])
        assert exc_info.value.code == 1


def test_entry_point_validation():
    """Test that main.py validates environment variables."""
    env = os.environ.copy()
    env["LOG_LEVEL"] = "invalid"

    result = subprocess.run(
        [sys.executable, "main.py", "builtin", "-m", "1", "-q", "2"],
        env=env,
        capture_output=True,
        text=True,
    )
    assert result.returncode == 1
    assert "LOG_LEVEL" in result.stderr
