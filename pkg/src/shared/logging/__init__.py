"""Structured logging for proxylight."""

from .logger_interface import LoggerInterface, LogLevel
from .structured_logger import StructuredFormatter, StructuredLogger, configure_logging, current_level

__all__ = [
    'LoggerInterface',
    'LogLevel',
    'StructuredFormatter',
    'StructuredLogger',
    'configure_logging',
    'current_level'
]
