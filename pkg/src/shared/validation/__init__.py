"""Validation rules and results."""

from .validator_interface import (
    ValidationIssue,
    ValidationResult,
    ValidationSeverity,
    ValidatorInterface
)
from .validation_rules import CustomRule, EnumRule, RangeRule, ValidationRule, is_finite_number

__all__ = [
    'ValidationIssue',
    'ValidationResult',
    'ValidationSeverity',
    'ValidatorInterface',
    'ValidationRule',
    'RangeRule',
    'EnumRule',
    'CustomRule',
    'is_finite_number'
]
