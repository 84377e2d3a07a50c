"""
Structured logging configuration for the GHRS codes toolkit.
Provides JSON logs for machine consumption and human-readable logs for
development. Handlers write to standard error so that command output on
standard output stays byte-for-byte deterministic.
"""

import json
import logging
import os
import sys
import time
import traceback
from datetime import datetime, timezone
from functools import wraps
from logging.handlers import RotatingFileHandler
from pathlib import Path
from typing import Any, Callable, Dict, Optional, TypeVar, cast

import numpy as np

# Type variable for decorator
F = TypeVar("F", bound=Callable[..., Any])

ROOT_LOGGER_NAME = "ghrs"

DEFAULT_LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"

# Log level from environment or WARNING; the CLI raises it with -v
DEFAULT_LOG_LEVEL = os.environ.get("GHRS_LOG_LEVEL", "WARNING").upper()

# "json" or "human"
DEFAULT_LOG_FORMAT_KIND = os.environ.get("GHRS_LOG_FORMAT", "human").lower()

# Maximum log file size (10 MB default)
MAX_LOG_SIZE = int(os.environ.get("GHRS_MAX_LOG_SIZE", 10 * 1024 * 1024))

# Maximum number of backup log files
BACKUP_COUNT = int(os.environ.get("GHRS_BACKUP_LOG_COUNT", 5))

# Arrays longer than this are summarised in log context
MAX_INLINE_ELEMENTS = 16


def summarize(value: Any) -> Any:
    """Make a context value loggable, summarising large field arrays."""
    if isinstance(value, np.ndarray):
        order = getattr(type(value), "order", None)
        prefix = f"GF({order})" if order is not None else str(value.dtype)
        if value.size <= MAX_INLINE_ELEMENTS:
            return f"{prefix}{value.view(np.ndarray).tolist()}"
        shape = " x ".join(str(d) for d in value.shape)
        return f"{prefix}[{shape}]"
    if isinstance(value, dict):
        return {str(k): summarize(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        if len(value) > MAX_INLINE_ELEMENTS:
            return f"<{type(value).__name__} of {len(value)}>"
        return [summarize(item) for item in value]
    if isinstance(value, (int, float, bool, str)) or value is None:
        return value
    return str(value)


class StructuredLogRecord(logging.LogRecord):
    """LogRecord carrying an ISO timestamp and formatted traceback."""

    def __init__(self, *args: Any, **kwargs: Any):
        super().__init__(*args, **kwargs)
        self.timestamp = datetime.now(timezone.utc).isoformat()
        if self.exc_info:
            self.traceback = traceback.format_exception(*self.exc_info)
        else:
            self.traceback = None


def _record_context(record: logging.LogRecord) -> Dict[str, Any]:
    context = record.__dict__.get("context") or {}
    return cast(Dict[str, Any], summarize(context))


class JsonFormatter(logging.Formatter):
    """
    Formatter that outputs one JSON object per line.
    """

    def format(self, record: logging.LogRecord) -> str:
        """Format the log record as a JSON string."""
        log_obj: Dict[str, Any] = {
            "timestamp": getattr(record, "timestamp", None),
            "level": record.levelname,
            "logger": record.name,
            "message": record.getMessage(),
            "module": record.module,
            "function": record.funcName,
            "line": record.lineno,
        }
        context = _record_context(record)
        if context:
            log_obj["context"] = context
        tb = getattr(record, "traceback", None)
        if tb:
            log_obj["traceback"] = tb
        return json.dumps(log_obj)


class HumanReadableFormatter(logging.Formatter):
    """
    Formatter that appends the context dictionary as indented lines.
    """

    def format(self, record: logging.LogRecord) -> str:
        """Format the log record in a human-readable format."""
        log_str = super().format(record)
        context = _record_context(record)
        if context:
            context_str = "\n".join(f"    {k}: {v}" for k, v in context.items())
            log_str += f"\n  Context:\n{context_str}"
        return log_str


class ContextAdapter(logging.LoggerAdapter):
    """
    Logger adapter that allows passing context with each log call.
    """

    def process(self, msg: Any, kwargs: Any) -> Any:
        """Move the ``context`` keyword into the record's extra dict."""
        context = kwargs.pop("context", {}) if kwargs else {}
        if not isinstance(context, dict):
            context = {"value": context}
        if self.extra:
            context = {**self.extra, **context}
        extra = kwargs.get("extra", {})
        extra["context"] = context
        kwargs["extra"] = extra
        return msg, kwargs


def with_context(func: F) -> F:
    """
    Decorator that logs entry, exit and duration of a function at DEBUG,
    and logs-then-reraises any exception.
    """

    @wraps(func)
    def wrapper(*args: Any, **kwargs: Any) -> Any:
        logger = get_logger(func.__module__)
        context = {
            "function": func.__name__,
            "args": [summarize(arg) for arg in args],
            "kwargs": {k: summarize(v) for k, v in kwargs.items()},
        }
        logger.debug(f"Entering {func.__name__}", context=context)
        start_time = time.perf_counter()
        try:
            result = func(*args, **kwargs)
        except Exception as e:
            error_context = {**context, "error": str(e), "error_type": type(e).__name__}
            logger.debug(f"Error in {func.__name__}", context=error_context)
            raise
        elapsed_ms = int((time.perf_counter() - start_time) * 1000)
        logger.debug(
            f"Exiting {func.__name__}",
            context={"function": func.__name__, "execution_time_ms": elapsed_ms},
        )
        return result

    return cast(F, wrapper)


def _make_formatter(kind: str) -> logging.Formatter:
    if kind == "json":
        return JsonFormatter()
    return HumanReadableFormatter(DEFAULT_LOG_FORMAT)


def setup_logging(
    log_level: str = DEFAULT_LOG_LEVEL,
    log_format: str = DEFAULT_LOG_FORMAT_KIND,
    log_file: Optional[str] = None,
) -> logging.Logger:
    """
    Configure the package root logger. Calling it again replaces the handlers,
    so the CLI can apply configuration after module import.

    Args:
        log_level: Level name such as ``INFO``
        log_format: ``json`` or ``human``
        log_file: Optional path for a rotating log file

    Returns:
        The configured root logger of the package
    """
    logger = logging.getLogger(ROOT_LOGGER_NAME)
    level = getattr(logging, str(log_level).upper(), logging.WARNING)
    logger.setLevel(level)
    logger.propagate = False

    for handler in list(logger.handlers):
        logger.removeHandler(handler)
        handler.close()

    formatter = _make_formatter(log_format)
    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setLevel(level)
    console_handler.setFormatter(formatter)
    logger.addHandler(console_handler)

    if log_file:
        try:
            path = Path(log_file)
            path.parent.mkdir(exist_ok=True, parents=True)
            file_handler = RotatingFileHandler(
                path, maxBytes=MAX_LOG_SIZE, backupCount=BACKUP_COUNT
            )
            file_handler.setLevel(level)
            file_handler.setFormatter(formatter)
            logger.addHandler(file_handler)
        except OSError as e:
            logger.warning(f"Could not set up log file: {e}")

    logging.setLogRecordFactory(StructuredLogRecord)
    return logger


def get_logger(name: Optional[str] = None) -> ContextAdapter:
    """
    Get a logger with context support, parented under the package root logger.

    Args:
        name: Logger name (defaults to the caller's module name)

    Returns:
        Context-aware logger
    """
    if name is None:
        frame = sys._getframe(1)
        name = frame.f_globals.get("__name__", ROOT_LOGGER_NAME)
    root = logging.getLogger(ROOT_LOGGER_NAME)
    if not root.handlers:
        setup_logging()
    suffix = str(name).split(".")[-1]
    return ContextAdapter(logging.getLogger(f"{ROOT_LOGGER_NAME}.{suffix}"), {})
