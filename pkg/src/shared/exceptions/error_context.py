"""
Error context management system.

This module provides utilities for capturing structured error
information, used to record per-entry failures in batch runs
without aborting them.
"""

import traceback
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional


@dataclass
class ErrorContext:
    """
    Structured error context information.

    Persisted contexts carry no timestamp so that failure records
    written next to a generated dataset stay reproducible.
    """

    error_type: str = ""
    error_message: str = ""
    stack_trace: Optional[List[str]] = None
    context_data: Dict[str, Any] = field(default_factory=dict)

    def to_dict(self, include_stack_trace: bool = False) -> Dict[str, Any]:
        """
        Convert error context to dictionary.

        Args:
            include_stack_trace: Whether to include the captured stack trace

        Returns:
            Dict[str, Any]: Dictionary representation
        """
        data: Dict[str, Any] = {
            "error_type": self.error_type,
            "error_message": self.error_message,
            "context_data": dict(self.context_data),
        }
        if include_stack_trace:
            data["stack_trace"] = self.stack_trace
        return data


class ErrorContextManager:
    """Helpers for creating and formatting error contexts."""

    @staticmethod
    def create_context(
        error: BaseException,
        include_stack_trace: bool = True,
        **context_data: Any
    ) -> ErrorContext:
        """
        Create error context from exception.

        Args:
            error: The exception to create context from
            include_stack_trace: Whether to include stack trace
            **context_data: Additional context data

        Returns:
            ErrorContext: Created error context
        """
        context = ErrorContext(
            error_type=error.__class__.__name__,
            error_message=str(error),
            context_data=context_data
        )

        if include_stack_trace:
            context.stack_trace = traceback.format_exception(
                type(error),
                error,
                error.__traceback__
            )

        return context

    @staticmethod
    def format_context(context: ErrorContext) -> str:
        """
        Format error context as a single human-readable string.

        Args:
            context: Error context to format

        Returns:
            str: Formatted error context
        """
        parts = [f"{context.error_type}: {context.error_message}"]

        if context.context_data:
            context_str = ", ".join(
                f"{k}={v}" for k, v in sorted(context.context_data.items())
            )
            parts.append(f"({context_str})")

        return " ".join(parts)

