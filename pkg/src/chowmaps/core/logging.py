"""
chowmaps - Centralized Logging Configuration

Everything logs under the ``chowmaps`` logger. Console output goes to stderr so
that stdout carries only the requested document.
"""

import json
import logging
import logging.handlers
import sys
import time
from datetime import datetime, timezone
from functools import wraps
from pathlib import Path
from typing import Optional

ROOT_LOGGER = "chowmaps"

LOG_LEVELS = {
    name: getattr(logging, name) for name in ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")
}

CONSOLE_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"
FILE_FORMAT = "%(asctime)s [%(levelname)s] %(name)s: %(message)s"
DATE_FORMAT = "%Y-%m-%d %H:%M:%S"


class ColoredFormatter(logging.Formatter):
    """Colors the level name on terminals"""

    COLORS = {
        logging.DEBUG: "\033[36m",
        logging.INFO: "\033[32m",
        logging.WARNING: "\033[33m",
        logging.ERROR: "\033[31m",
        logging.CRITICAL: "\033[35m",
    }
    RESET = "\033[0m"

    def format(self, record):
        levelname = record.levelname
        color = self.COLORS.get(record.levelno)
        if color:
            record.levelname = f"{color}{levelname}{self.RESET}"
        try:
            return super().format(record)
        finally:
            record.levelname = levelname


class StructuredFormatter(logging.Formatter):
    """One JSON object per record.

    Verification cells attach their coordinates and timings through
    ``extra={"extra_fields": {"r": 2, "d": 3, ...}}``.
    """

    def format(self, record):
        entry = {
            "timestamp": datetime.now(timezone.utc).isoformat(),
            "level": record.levelname,
            "logger": record.name,
            "message": record.getMessage(),
            "function": record.funcName,
        }
        if record.exc_info:
            entry["exception"] = self.formatException(record.exc_info)
        entry.update(getattr(record, "extra_fields", {}))
        return json.dumps(entry, ensure_ascii=False, default=str)


def _rotating_handler(path: Path, level: int, formatter: logging.Formatter,
                      max_file_size: int, backup_count: int) -> logging.Handler:
    handler = logging.handlers.RotatingFileHandler(
        path, maxBytes=max_file_size, backupCount=backup_count, encoding="utf-8"
    )
    handler.setLevel(level)
    handler.setFormatter(formatter)
    return handler


def setup_logging(
    log_level: str = "WARNING",
    log_dir: Optional[str] = None,
    enable_file_logging: bool = False,
    enable_console_logging: bool = True,
    max_file_size: int = 10 * 1024 * 1024,  # 10MB
    backup_count: int = 5,
    structured: bool = False
) -> None:
    """
    Configure the chowmaps package logger

    Args:
        log_level: Logging level (DEBUG, INFO, WARNING, ERROR, CRITICAL)
        log_dir: Directory for log files (defaults to ./logs)
        enable_file_logging: Write chowmaps.log and chowmaps-error.log
        enable_console_logging: Log to stderr
        max_file_size: Maximum size of a log file before rotation
        backup_count: Number of rotated files to keep
        structured: JSON lines instead of plain text in the log files
    """
    level = LOG_LEVELS.get(log_level.upper(), logging.WARNING)

    package_logger = logging.getLogger(ROOT_LOGGER)
    package_logger.handlers.clear()
    package_logger.setLevel(level)
    package_logger.propagate = False

    if enable_console_logging:
        console_handler = logging.StreamHandler(sys.stderr)
        console_handler.setLevel(level)
        console_handler.setFormatter(ColoredFormatter(fmt=CONSOLE_FORMAT, datefmt=DATE_FORMAT))
        package_logger.addHandler(console_handler)

    if enable_file_logging:
        log_path = Path.cwd() / "logs" if log_dir is None else Path(log_dir)
        log_path.mkdir(parents=True, exist_ok=True)
        formatter = StructuredFormatter() if structured else logging.Formatter(FILE_FORMAT, DATE_FORMAT)
        package_logger.addHandler(
            _rotating_handler(log_path / "chowmaps.log", level, formatter, max_file_size, backup_count)
        )
        package_logger.addHandler(
            _rotating_handler(log_path / "chowmaps-error.log", logging.ERROR, formatter,
                              max_file_size, backup_count)
        )

    package_logger.debug(
        f"🚀 logging at {logging.getLevelName(level)}, "
        f"file logging {'on' if enable_file_logging else 'off'}"
    )


def get_logger(name: str) -> logging.Logger:
    """Get a logger under the chowmaps namespace"""
    if name != ROOT_LOGGER and not name.startswith(ROOT_LOGGER + "."):
        name = f"{ROOT_LOGGER}.{name}"
    return logging.getLogger(name)


def log_execution_time(logger: logging.Logger, level: int = logging.DEBUG):
    """Decorator to log how long a suite or computation took"""
    def decorator(func):
        @wraps(func)
        def wrapper(*args, **kwargs):
            start = time.perf_counter()
            try:
                result = func(*args, **kwargs)
            except Exception as e:
                logger.error(f"❌ {func.__name__} failed after {time.perf_counter() - start:.3f}s: {e}")
                raise
            logger.log(level, f"✅ {func.__name__} completed in {time.perf_counter() - start:.3f}s")
            return result
        return wrapper
    return decorator
