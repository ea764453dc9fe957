"""Utility functions for semiauto.

Provides shared functionality: logging, diagnostic records and word formatting.
"""

import logging
import logging.handlers
import os
import sys
from dataclasses import dataclass
from typing import Hashable, Optional, Sequence

from . import __app_name__, __version__
from .config import DATA_DIR

APP_NAME = __app_name__
APP_VERSION = __version__

# Diagnostic status constants
STATUS_OK = "ok"
STATUS_WARN = "warn"
STATUS_ERROR = "error"

CLI_STATUS_LABEL = {
    STATUS_OK: "[ OK ]",
    STATUS_WARN: "[WARN]",
    STATUS_ERROR: "[FAIL]",
}

EMPTY_WORD_DISPLAY = "ε"

# Debug mode
DEBUG = bool(os.environ.get("SEMIAUTO_DEBUG"))

# ---------------------------------------------------------------------------
# File logger: rotating, 500 KB max with 1 backup
# ---------------------------------------------------------------------------
_LOG_PATH = DATA_DIR / "semiauto.log"
_LOG_MAX_BYTES = 500_000
_LOG_BACKUP_COUNT = 1


def _init_file_logger() -> logging.Logger:
    """Create the package logger; silent if the data directory is not writable."""
    logger = logging.getLogger("semiauto")
    logger.setLevel(logging.DEBUG)
    if not logger.handlers:
        try:
            DATA_DIR.mkdir(parents=True, exist_ok=True)
            handler: logging.Handler = logging.handlers.RotatingFileHandler(
                _LOG_PATH,
                maxBytes=_LOG_MAX_BYTES,
                backupCount=_LOG_BACKUP_COUNT,
                encoding="utf-8",
            )
        except OSError:
            handler = logging.NullHandler()
        handler.setFormatter(logging.Formatter(
            "%(asctime)s [%(levelname)s] %(message)s", datefmt="%Y-%m-%d %H:%M:%S"
        ))
        logger.addHandler(handler)
    return logger


_file_logger = _init_file_logger()


@dataclass
class DiagnosticResult:
    """Result from a diagnostic check.

    Attributes:
        key: Unique identifier for this check
        label: Human-readable label
        status: One of STATUS_OK, STATUS_WARN, STATUS_ERROR
        detail: Detailed description of the result
        remedy: Optional suggestion for fixing issues
    """

    key: str
    label: str
    status: str
    detail: str
    remedy: Optional[str] = None


def debug(message: str) -> None:
    """Log a debug message to the logfile and to stdout when SEMIAUTO_DEBUG is set."""
    _file_logger.debug(message)
    if DEBUG:
        print(f"[DEBUG] {message}")


def error(message: str) -> None:
    """Log an error message; always echoed to stderr."""
    _file_logger.error(message)
    print(f"[ERROR] {message}", file=sys.stderr)


def format_word(word: Sequence[Hashable]) -> str:
    """Render a word for humans: plain concatenation, or dot-separated for long names."""
    if not word:
        return EMPTY_WORD_DISPLAY
    names = [str(symbol) for symbol in word]
    if all(len(name) == 1 for name in names):
        return "".join(names)
    return ".".join(names)


def format_diagnostic(result: DiagnosticResult) -> str:
    """One CLI line per diagnostic, e.g. ``[FAIL] Containment (a): ...``."""
    line = f"{CLI_STATUS_LABEL.get(result.status, '[????]')} {result.label}: {result.detail}"
    if result.remedy:
        line += f" -> {result.remedy}"
    return line
