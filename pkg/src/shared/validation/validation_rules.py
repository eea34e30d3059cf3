"""
Composable validation rules.

A rule is a predicate plus the message reported when it fails.
"""

import math
from abc import ABC, abstractmethod
from enum import Enum
from typing import Any, Callable, Dict, Optional, Type, Union

from .validator_interface import ValidationSeverity

Number = Union[int, float]
RuleContext = Optional[Dict[str, Any]]


def is_finite_number(value: Any) -> bool:
    """True for finite ints and floats; booleans do not count."""
    return isinstance(value, (int, float)) and not isinstance(value, bool) and math.isfinite(value)


class ValidationRule(ABC):
    """Base class for validation rules."""

    def __init__(self, message: str, severity: ValidationSeverity = ValidationSeverity.ERROR):
        """
        Initialize validation rule.

        Args:
            message: Reported when the rule fails
            severity: Rule severity
        """
        self.message = message
        self.severity = severity

    @abstractmethod
    def validate(self, value: Any, context: RuleContext = None) -> bool:
        """Whether ``value`` satisfies the rule."""

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}({self.message!r})"


class RangeRule(ValidationRule):
    """
    Finite number within [min_value, max_value].

    The upper bound is excluded when ``exclusive_max`` is set.
    """

    def __init__(
        self,
        message: str,
        min_value: Optional[Number] = None,
        max_value: Optional[Number] = None,
        exclusive_max: bool = False,
        severity: ValidationSeverity = ValidationSeverity.ERROR
    ):
        super().__init__(message, severity)
        self.min_value = min_value
        self.max_value = max_value
        self.exclusive_max = exclusive_max

    def validate(self, value: Any, context: RuleContext = None) -> bool:
        if not is_finite_number(value):
            return False
        if self.min_value is not None and value < self.min_value:
            return False
        if self.max_value is None:
            return True
        return value < self.max_value if self.exclusive_max else value <= self.max_value


class EnumRule(ValidationRule):
    """Member, or member value, of an enum."""

    def __init__(
        self,
        message: str,
        enum_class: Type[Enum],
        severity: ValidationSeverity = ValidationSeverity.ERROR
    ):
        super().__init__(message, severity)
        self.enum_class = enum_class

    def validate(self, value: Any, context: RuleContext = None) -> bool:
        if isinstance(value, self.enum_class):
            return True
        try:
            self.enum_class(value)
        except ValueError:
            return False
        return True


class CustomRule(ValidationRule):
    """Arbitrary predicate over the value and the validator's field context."""

    def __init__(
        self,
        message: str,
        predicate: Callable[[Any, RuleContext], bool],
        severity: ValidationSeverity = ValidationSeverity.ERROR
    ):
        super().__init__(message, severity)
        self.predicate = predicate

    def validate(self, value: Any, context: RuleContext = None) -> bool:
        return bool(self.predicate(value, context))
