"""
Logger interface for standardized logging across the application.

This module defines the interface for logging implementations,
ensuring consistent logging behavior across the application.
"""

import logging
from abc import ABC, abstractmethod
from enum import Enum
from typing import Any, Optional


class LogLevel(Enum):
    """Standard log levels."""
    DEBUG = "DEBUG"
    INFO = "INFO"
    WARNING = "WARNING"
    ERROR = "ERROR"
    CRITICAL = "CRITICAL"

    @property
    def numeric(self) -> int:
        """Numeric level as understood by the ``logging`` module."""
        return getattr(logging, self.value)

    @classmethod
    def parse(cls, value: Optional[str], default: "LogLevel") -> "LogLevel":
        """
        Parse a case-insensitive level name.

        Args:
            value: Level name, e.g. from an environment variable
            default: Level returned when value is empty or unknown

        Returns:
            LogLevel: Parsed level
        """
        if not value:
            return default
        try:
            return cls(value.strip().upper())
        except ValueError:
            return default


class LoggerInterface(ABC):
    """
    Interface for logging implementations.

    This abstract class defines the contract that all logging
    implementations must follow.
    """

    @abstractmethod
    def debug(self, message: str, **kwargs: Any) -> None:
        """Log a debug message with optional context data."""

    @abstractmethod
    def info(self, message: str, **kwargs: Any) -> None:
        """Log an info message with optional context data."""

    @abstractmethod
    def warning(self, message: str, **kwargs: Any) -> None:
        """Log a warning message with optional context data."""

    @abstractmethod
    def error(self, message: str, **kwargs: Any) -> None:
        """Log an error message with optional context data."""

    @abstractmethod
    def exception(self, message: str, exc_info: Optional[BaseException] = None, **kwargs: Any) -> None:
        """
        Log an exception.

        Args:
            message: The message to log
            exc_info: Optional exception to log
            **kwargs: Additional context data
        """

    @abstractmethod
    def get_level(self) -> LogLevel:
        """
        Get the current logging level.

        Returns:
            LogLevel: The current log level
        """

    @abstractmethod
    def add_context(self, **kwargs: Any) -> None:
        """
        Add context data to all subsequent log messages.

        Args:
            **kwargs: Context data to add
        """
