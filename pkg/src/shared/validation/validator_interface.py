"""
Validation results and the rule-based validator base class.

Validators report every violated constraint at once so a bad set of
parameters can be fixed in one pass.
"""

from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, Generic, List, Optional, TypeVar

T = TypeVar('T')


class ValidationSeverity(Enum):
    """Errors make a result invalid; warnings do not."""
    ERROR = "ERROR"
    WARNING = "WARNING"


@dataclass(frozen=True)
class ValidationIssue:
    """One violated rule."""
    severity: ValidationSeverity
    message: str
    field: Optional[str] = None
    value: Any = None

    def __str__(self) -> str:
        return self.message


@dataclass
class ValidationResult(Generic[T]):
    """
    Issues found while validating ``data``.

    ``is_valid`` is derived: a result is valid while it holds no
    ERROR-severity issue.
    """
    data: Optional[T] = None
    issues: List[ValidationIssue] = field(default_factory=list)

    @property
    def is_valid(self) -> bool:
        return not self.errors

    @property
    def errors(self) -> List[str]:
        """Messages of all ERROR-severity issues, in the order found."""
        return [str(i) for i in self.issues if i.severity is ValidationSeverity.ERROR]

    @property
    def warnings(self) -> List[str]:
        return [str(i) for i in self.issues if i.severity is ValidationSeverity.WARNING]

    def add_issue(
        self,
        severity: ValidationSeverity,
        message: str,
        field: Optional[str] = None,
        value: Any = None
    ) -> None:
        """Record one issue."""
        self.issues.append(ValidationIssue(severity=severity, message=message, field=field, value=value))

    def merge(self, other: 'ValidationResult[T]') -> 'ValidationResult[T]':
        """Issues of both results; the data of the first one that has any."""
        return ValidationResult(
            data=self.data if self.data is not None else other.data,
            issues=[*self.issues, *other.issues]
        )

    def to_dict(self) -> Dict[str, Any]:
        return {
            "is_valid": self.is_valid,
            "issues": [
                {
                    "severity": issue.severity.value,
                    "field": issue.field,
                    "message": issue.message,
                    "value": issue.value
                }
                for issue in self.issues
            ]
        }


class ValidatorInterface(ABC, Generic[T]):
    """
    Base class of rule-based validators.

    Rules are registered per field. ``validate`` decides which fields
    are checked and how; ``validate_field`` runs the rules of one field
    with ``field_context(data)`` handed to every rule, which is how
    cross-field constraints see the other values.
    """

    def __init__(self) -> None:
        self._rules: Dict[str, List[Any]] = {}

    @abstractmethod
    def validate(self, data: T) -> ValidationResult[T]:
        """
        Validate an object.

        Args:
            data: Object to validate

        Returns:
            ValidationResult[T]: Every issue found
        """

    def field_context(self, data: T) -> Dict[str, Any]:
        """Values made visible to every rule; none by default."""
        return {}

    def validate_field(self, field: str, value: Any, data: T) -> ValidationResult[T]:
        """Run the rules registered for ``field``."""
        result: ValidationResult[T] = ValidationResult()
        context = self.field_context(data)
        for rule in self._rules.get(field, []):
            if not rule.validate(value, context):
                result.add_issue(rule.severity, rule.message, field=field, value=value)
        return result

    def get_rules(self) -> Dict[str, List[Any]]:
        """Registered rules keyed by field (a copy)."""
        return {name: list(rules) for name, rules in self._rules.items()}

    def add_rule(self, field: str, rule: Any) -> None:
        self._rules.setdefault(field, []).append(rule)
