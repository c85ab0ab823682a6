"""Configuration: YAML tunables plus environment overrides."""

import copy
import os
from pathlib import Path
from typing import Any, Dict, Optional

import yaml

from .logging_utils import get_logger
from .utils.exceptions import FlagError

logger = get_logger()

DEFAULT_CONFIG_PATH = "config/defaults.yaml"


def _get_default_config() -> Dict[str, Any]:
    # built-in defaults, used for every key the YAML file leaves out
    return {
        "max_degree": 8,
        "random_module": {
            "max_blocks": 3,
            "max_rank": 2,
            "max_torsion": 6,
            "allow_free": True,
            "conjugate": True,
        },
        "oracle": {"max_degree": 6},
        "periodicity": {"window_periods": 1},
        "output": {"default_format": "text"},
    }


def _merge(base: Dict[str, Any], override: Dict[str, Any]) -> Dict[str, Any]:
    merged = copy.deepcopy(base)
    for key, value in override.items():
        if isinstance(value, dict) and isinstance(merged.get(key), dict):
            merged[key] = _merge(merged[key], value)
        else:
            merged[key] = value
    return merged


def load_config(config_path: Optional[str] = None) -> Dict[str, Any]:
    # load configuration from YAML file, falling back to defaults
    path = config_path or os.getenv("LEECH_CONFIG", DEFAULT_CONFIG_PATH)
    defaults = _get_default_config()
    try:
        config_file = Path(path)
        if not config_file.exists():
            logger.warning(f"Config file {path} not found, using defaults")
            return defaults

        with open(config_file, "r") as f:
            loaded = yaml.safe_load(f) or {}
        if not isinstance(loaded, dict):
            logger.error(f"Config file {path} is not a mapping, using defaults")
            return defaults
        return _merge(defaults, loaded)
    except (OSError, yaml.YAMLError) as e:
        logger.error(f"Error loading config: {e}")
        return defaults


def _section(config: Dict[str, Any], key: str) -> Dict[str, Any]:
    section = config[key]
    if not isinstance(section, dict):
        raise FlagError(f"config key {key!r} must be a mapping, got {section!r}")
    return dict(section)


def _config_int(key: str, value: Any, minimum: int) -> int:
    # YAML integers, or strings holding one; bools and floats are rejected
    if isinstance(value, bool) or not isinstance(value, (int, str)):
        raise FlagError(f"config key {key!r} must be an integer, got {value!r}")
    try:
        number = int(value)
    except ValueError:
        raise FlagError(f"config key {key!r} must be an integer, got {value!r}")
    if number < minimum:
        raise FlagError(f"config key {key!r} must be >= {minimum}, got {number}")
    return number


class Settings:
    """Runtime settings: environment variables win over the YAML file."""

    def __init__(self, config_path: Optional[str] = None):
        self.config = load_config(config_path)
        self.max_degree_default = self._max_degree_from_env(
            _config_int("max_degree", self.config["max_degree"], 0)
        )
        oracle = _section(self.config, "oracle")
        self.oracle_max_degree = _config_int("oracle.max_degree", oracle["max_degree"], 0)
        periodicity = _section(self.config, "periodicity")
        self.window_periods = _config_int(
            "periodicity.window_periods", periodicity["window_periods"], 1
        )
        self.default_format = str(_section(self.config, "output")["default_format"])
        self.random_module = _section(self.config, "random_module")

    @staticmethod
    def _max_degree_from_env(fallback: int) -> int:
        raw = os.getenv("LEECH_MAX_DEGREE_DEFAULT")
        if raw is None or not raw.strip():
            return fallback
        try:
            value = int(raw)
        except ValueError:
            logger.warning(f"LEECH_MAX_DEGREE_DEFAULT={raw!r} is not an integer, using {fallback}")
            return fallback
        if value < 1:
            logger.warning(f"LEECH_MAX_DEGREE_DEFAULT={value} is below 1, using {fallback}")
            return fallback
        return value
