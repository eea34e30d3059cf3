"""
Configuration validator for validating configuration values.

This module checks a resolved profile before any work starts, so a
bad value in the YAML file fails fast with every problem listed.
"""

from typing import Any, Dict, List

from ...core.entities import TranslationMode, TranslationParams
from ...shared.exceptions import ArgumentError
from ...shared.validation import is_finite_number

VALID_LOG_LEVELS = ["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"]
VALID_FORMATS = ["png", "jpeg", "jpg"]
VALID_TASKS = ["saliency", "depth"]


class ConfigValidator:
    """
    Validator for configuration values.

    Problems are collected across all sections and raised together.
    """

    def __init__(self):
        """Initialize the validator."""
        self.errors: List[str] = []

    def validate_config(self, config: Dict[str, Any]) -> None:
        """
        Validate configuration.

        Args:
            config: Configuration to validate

        Raises:
            ArgumentError: If configuration is invalid
        """
        self.errors = []

        if "translation" in config:
            self._validate_translation_config(config["translation"])

        if "generation" in config:
            self._validate_generation_config(config["generation"])

        if "metrics" in config:
            self._validate_metrics_config(config["metrics"])

        if "logging" in config:
            self._validate_logging_config(config["logging"])

        if self.errors:
            raise ArgumentError("\n".join(self.errors))

    def _validate_translation_config(self, config: Dict[str, Any]) -> None:
        """
        Validate translation configuration.

        Args:
            config: Translation configuration
        """
        for field in ("lambda_l", "lambda_u", "gamma"):
            if not is_finite_number(config.get(field)):
                self.errors.append(f"Translation {field} must be a finite number")
        try:
            mode = TranslationMode.parse(config.get("mode", "ours"))
        except ArgumentError as e:
            self.errors.append(str(e))
            return
        if self.errors:
            return

        params = TranslationParams(
            lambda_l=float(config["lambda_l"]),
            lambda_u=float(config["lambda_u"]),
            gamma=float(config["gamma"]),
            mode=mode
        )
        self.errors.extend(params.validate().errors)

    def _validate_generation_config(self, config: Dict[str, Any]) -> None:
        """
        Validate generation configuration.

        Args:
            config: Generation configuration
        """
        if "seed" in config:
            seed = config["seed"]
            if not isinstance(seed, int) or isinstance(seed, bool):
                self.errors.append("Generation seed must be an integer")

        if "workers" in config:
            workers = config["workers"]
            if not isinstance(workers, int) or isinstance(workers, bool) or workers < 0:
                self.errors.append("Generation workers must be a non-negative integer")

        if "format" in config:
            fmt = config["format"]
            if not isinstance(fmt, str) or fmt.lower() not in VALID_FORMATS:
                self.errors.append(f"Generation format must be one of: {', '.join(VALID_FORMATS)}")

    def _validate_metrics_config(self, config: Dict[str, Any]) -> None:
        """
        Validate metrics configuration.

        Args:
            config: Metrics configuration
        """
        if "task" in config and config["task"] not in VALID_TASKS:
            self.errors.append(f"Metrics task must be one of: {', '.join(VALID_TASKS)}")

        if "beta_sq" in config:
            beta_sq = config["beta_sq"]
            if not is_finite_number(beta_sq) or beta_sq < 0:
                self.errors.append("Metrics beta_sq must be a non-negative number")

    def _validate_logging_config(self, config: Dict[str, Any]) -> None:
        """
        Validate logging configuration.

        Args:
            config: Logging configuration
        """
        if "level" in config:
            level = config["level"]
            if not isinstance(level, str) or level.upper() not in VALID_LOG_LEVELS:
                self.errors.append(
                    f"Logging level must be one of: {', '.join(VALID_LOG_LEVELS)}"
                )
