"""
Core interfaces module for proxylight.

This module provides access to the service contracts used throughout
the application.
"""

from .service_interface import (
    DatasetServiceInterface,
    EvaluationServiceInterface,
    TranslationServiceInterface
)

__all__ = [
    'DatasetServiceInterface',
    'EvaluationServiceInterface',
    'TranslationServiceInterface'
]
