"""
Structured logger implementation.

Log lines are single JSON objects so batch runs over thousands of
images can be filtered and aggregated by machine. Module code keeps
using ``logging.getLogger(__name__)``; ``configure_logging`` attaches a
handler with ``StructuredFormatter`` to the package logger, so those
records come out in the same shape as ``StructuredLogger`` calls.
"""

import json
import logging
import os
import sys
import traceback
from datetime import datetime, timezone
from typing import Any, Dict, Optional, TextIO

from .logger_interface import LoggerInterface, LogLevel

LOG_ENV_VAR = "PROXYLIGHT_LOG"
PACKAGE_LOGGER = "src"

# Attributes every LogRecord carries; anything else came in via ``extra``.
_RESERVED_ATTRS = frozenset(vars(logging.LogRecord("", 0, "", 0, "", None, None)).keys()) | {
    "message", "asctime"
}


def _exception_payload(exc: BaseException) -> Dict[str, Any]:
    return {
        "type": exc.__class__.__name__,
        "message": str(exc),
        "traceback": traceback.format_exception(type(exc), exc, exc.__traceback__)
    }


class StructuredFormatter(logging.Formatter):
    """Render log records as one JSON object per line."""

    def format(self, record: logging.LogRecord) -> str:
        context = {
            key: value for key, value in vars(record).items()
            if key not in _RESERVED_ATTRS and not key.startswith("_")
        }
        context.update(getattr(record, "_context", {}))

        log_entry: Dict[str, Any] = {
            "timestamp": datetime.fromtimestamp(record.created, tz=timezone.utc).isoformat(),
            "level": record.levelname,
            "logger": record.name,
            "message": record.getMessage(),
            "context": context
        }

        if record.exc_info and record.exc_info[1] is not None:
            log_entry["exception"] = _exception_payload(record.exc_info[1])

        return json.dumps(log_entry, default=str)


class _CurrentStderrHandler(logging.StreamHandler):
    """Stream handler that always writes to whatever ``sys.stderr`` currently is."""

    @property
    def stream(self) -> TextIO:
        return sys.stderr

    @stream.setter
    def stream(self, value: TextIO) -> None:
        pass


class StructuredLogger(LoggerInterface):
    """
    Structured logger implementation.

    Wraps a standard library logger and attaches persistent context
    data to every message it emits.
    """

    def __init__(
        self,
        name: str,
        level: LogLevel = LogLevel.INFO,
        output: Optional[TextIO] = None
    ):
        """
        Initialize the structured logger.

        Args:
            name: Logger name
            level: Initial log level
            output: Output stream for logs (the current stderr when omitted)
        """
        self.name = name
        self._level = level
        self._context: Dict[str, Any] = {}

        self._logger = logging.getLogger(name)
        self._logger.setLevel(level.numeric)

        # One handler per logger, however often it is configured
        if not any(getattr(h, "_proxylight", False) for h in self._logger.handlers):
            handler = logging.StreamHandler(output) if output is not None else _CurrentStderrHandler()
            handler.setFormatter(StructuredFormatter())
            handler._proxylight = True  # type: ignore[attr-defined]
            self._logger.addHandler(handler)
            self._logger.propagate = False

    def _log(
        self,
        level: LogLevel,
        message: str,
        exc_info: Optional[BaseException] = None,
        **kwargs: Any
    ) -> None:
        if level.numeric < self._level.numeric:
            return

        self._logger.log(
            level.numeric,
            message,
            exc_info=(type(exc_info), exc_info, exc_info.__traceback__) if exc_info else None,
            extra={"_context": {**self._context, **kwargs}}
        )

    def debug(self, message: str, **kwargs: Any) -> None:
        """Log a debug message."""
        self._log(LogLevel.DEBUG, message, **kwargs)

    def info(self, message: str, **kwargs: Any) -> None:
        """Log an info message."""
        self._log(LogLevel.INFO, message, **kwargs)

    def warning(self, message: str, **kwargs: Any) -> None:
        """Log a warning message."""
        self._log(LogLevel.WARNING, message, **kwargs)

    def error(self, message: str, **kwargs: Any) -> None:
        """Log an error message."""
        self._log(LogLevel.ERROR, message, **kwargs)

    def exception(self, message: str, exc_info: Optional[BaseException] = None, **kwargs: Any) -> None:
        """Log an exception."""
        self._log(LogLevel.ERROR, message, exc_info=exc_info, **kwargs)

    def get_level(self) -> LogLevel:
        """Get the current logging level."""
        return self._level

    def add_context(self, **kwargs: Any) -> None:
        """Add context data."""
        self._context.update(kwargs)


def configure_logging(
    name: str = PACKAGE_LOGGER,
    level: Optional[LogLevel] = None,
    output: Optional[TextIO] = None
) -> StructuredLogger:
    """
    Configure and return a StructuredLogger instance.

    When no level is given it is read from ``PROXYLIGHT_LOG``,
    defaulting to WARNING.

    Args:
        name: Logger name
        level: Logging level
        output: Output stream for logs

    Returns:
        StructuredLogger: Configured logger instance
    """
    if level is None:
        level = LogLevel.parse(os.environ.get(LOG_ENV_VAR), LogLevel.WARNING)
    return StructuredLogger(name=name, level=level, output=output)


def current_level(name: str = PACKAGE_LOGGER) -> LogLevel:
    """Effective level of ``name`` as a LogLevel (WARNING when unset)."""
    return LogLevel.parse(logging.getLevelName(logging.getLogger(name).getEffectiveLevel()), LogLevel.WARNING)
