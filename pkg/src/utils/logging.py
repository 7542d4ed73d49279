"""
Logging configuration for the Hopf image toolkit.
"""

import logging
import logging.handlers
import os
import sys
from typing import Optional

from config import LOG_LEVEL, LOG_FORMAT, LOG_FILE, LOG_MAX_BYTES, LOG_BACKUP_COUNT, LOG_TO_FILE


def setup_logging(level: Optional[str] = None, log_file: Optional[str] = None):
    """
    Set up logging configuration for the toolkit.

    Console output goes to stderr so that reports written to stdout stay
    byte-stable.

    Args:
        level: Level name overriding LOG_LEVEL
        log_file: Path of a rotating log file; LOG_FILE is used when
            LOG_TO_FILE is set and no path is given

    Returns:
        The configured root logger
    """
    level_name = (level or LOG_LEVEL).upper()
    if log_file is None and LOG_TO_FILE:
        log_file = LOG_FILE

    logger = logging.getLogger()
    logger.setLevel(getattr(logging, level_name))

    # Remove existing handlers
    for handler in logger.handlers[:]:
        logger.removeHandler(handler)

    formatter = logging.Formatter(LOG_FORMAT)

    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setLevel(getattr(logging, level_name))
    console_handler.setFormatter(formatter)
    logger.addHandler(console_handler)

    if log_file:
        directory = os.path.dirname(log_file)
        if directory:
            os.makedirs(directory, exist_ok=True)
        file_handler = logging.handlers.RotatingFileHandler(
            log_file,
            maxBytes=LOG_MAX_BYTES,
            backupCount=LOG_BACKUP_COUNT
        )
        file_handler.setLevel(getattr(logging, level_name))
        file_handler.setFormatter(formatter)
        logger.addHandler(file_handler)

    return logger
