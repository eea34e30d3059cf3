"""Shared exception types and error context helpers."""

from .errors import ArgumentError, ImageDecodeError, ImageIOError, ProxyLightError
from .error_context import ErrorContext, ErrorContextManager

__all__ = [
    'ProxyLightError',
    'ArgumentError',
    'ImageDecodeError',
    'ImageIOError',
    'ErrorContext',
    'ErrorContextManager'
]
