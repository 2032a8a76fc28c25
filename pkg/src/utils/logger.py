import logging
import sys
from typing import Optional

from .errors import SchemaError

LEVELS = ('DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL')


def setup_logger(name: str = "src", level: str = "INFO",
                 log_file: Optional[str] = None) -> logging.Logger:
    """Setup logger with stderr and optional file output."""
    level = str(level).upper()
    if level not in LEVELS:
        raise SchemaError('log-level', f"must be one of {LEVELS}, got {level!r}")

    logger = logging.getLogger(name)
    logger.setLevel(getattr(logging, level))

    # Remove existing handlers
    logger.handlers = []

    # Reports go to stdout, diagnostics to stderr
    console_handler = logging.StreamHandler(sys.stderr)
    formatter = logging.Formatter('%(asctime)s - %(name)s - %(levelname)s - %(message)s')
    console_handler.setFormatter(formatter)
    logger.addHandler(console_handler)

    if log_file:
        file_handler = logging.FileHandler(log_file)
        file_handler.setFormatter(formatter)
        logger.addHandler(file_handler)

    return logger
