import logging
import os
import sys
from typing import NoReturn


def _fail(message: str) -> NoReturn:
    # startup configuration errors go to stderr and stop the process
    print(message, file=sys.stderr)
    sys.exit(1)


def setup_logging() -> logging.Logger:
    # set up logging based on environment variables
    logger = logging.getLogger("src")

    # clear any existing handlers
    logger.handlers.clear()

    # validate LOG_FILE first, regardless of log level
    log_file = os.getenv("LOG_FILE")
    if log_file:
        try:
            # validate we can write to the file path eagerly
            with open(log_file, "a"):
                pass
        except OSError as e:
            _fail(f"Error: Invalid LOG_FILE path '{log_file}': {e}")

    # get log level from environment (0=silent, 1=info, 2=debug)
    log_level_env = os.getenv("LOG_LEVEL", "0")
    try:
        log_level_num = int(log_level_env)
    except ValueError:
        _fail(f"Error: LOG_LEVEL must be an integer, got '{log_level_env}'")

    if log_level_num not in {0, 1, 2}:
        _fail(f"Error: LOG_LEVEL must be 0, 1, or 2, got {log_level_num}")

    if log_level_num == 0:
        logger.setLevel(logging.CRITICAL + 1)
        return logger
    elif log_level_num == 1:
        logger.setLevel(logging.INFO)
    else:
        logger.setLevel(logging.DEBUG)

    formatter = logging.Formatter(
        "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
    )

    if log_file:
        handler: logging.Handler = logging.FileHandler(log_file)
    else:
        # default to stderr so tables on stdout stay clean
        handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(formatter)
    logger.addHandler(handler)

    return logger


def get_logger() -> logging.Logger:
    # get the configured logger instance
    return logging.getLogger("src")
