# CHECKPOINT_1_PROJECT_SETUP
"""
Logging Utilities
=================
Centralized logging configuration.
Logs go to stderr so that stdout stays reserved for command output.
"""

import logging
import sys
from pathlib import Path
from typing import Optional

import colorlog

from lorenz_links.config import settings

ROOT_LOGGER_NAME = "lorenz_links"

_LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
_COLOR_FORMAT = "%(log_color)s%(asctime)s - %(name)s - %(levelname)s%(reset)s - %(message)s"


def setup_logging(level: Optional[str] = None) -> logging.Logger:
    """
    Configure package logging.
    Safe to call repeatedly: handlers installed by a previous call are replaced.
    Returns the package logger.
    """
    level_name = (level or settings.LOG_LEVEL).upper()
    logger = logging.getLogger(ROOT_LOGGER_NAME)
    logger.setLevel(getattr(logging, level_name))

    for handler in list(logger.handlers):
        logger.removeHandler(handler)
        handler.close()

    stream_handler = colorlog.StreamHandler(sys.stderr)
    stream_handler.setFormatter(
        colorlog.ColoredFormatter(
            _COLOR_FORMAT,
            log_colors={
                "DEBUG": "cyan",
                "INFO": "green",
                "WARNING": "yellow",
                "ERROR": "red",
                "CRITICAL": "bold_red",
            },
        )
    )
    logger.addHandler(stream_handler)

    # Add file handler if enabled
    if settings.LOG_TO_FILE:
        log_path = Path(settings.LOG_FILE_PATH)
        log_path.parent.mkdir(parents=True, exist_ok=True)
        file_handler = logging.FileHandler(log_path)
        file_handler.setFormatter(logging.Formatter(_LOG_FORMAT))
        logger.addHandler(file_handler)

    logger.debug(f"Logging configured at {level_name}")
    return logger


def get_logger(name: str) -> logging.Logger:
    """Get a logger for a specific module"""
    return logging.getLogger(f"{ROOT_LOGGER_NAME}.{name}")
