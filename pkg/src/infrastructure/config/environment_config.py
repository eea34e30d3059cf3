"""
Profiled configuration for proxylight.

A YAML file holds named profiles (``default``, ``extreme``,
``ablation``); one profile is selected, laid over the built-in
defaults, and adjusted by environment variables.
"""

import copy
import os
from pathlib import Path
from typing import Any, Dict, Optional

import yaml

from .config_validator import ConfigValidator
from ...core.entities import (
    DEFAULT_GAMMA,
    DEFAULT_LAMBDA_L,
    DEFAULT_LAMBDA_U,
    TranslationParams
)
from ...shared.exceptions import ArgumentError, ImageIOError

CONFIG_ENV_VAR = "PROXYLIGHT_CONFIG"
PROFILE_ENV_VAR = "PROXYLIGHT_PROFILE"
LOG_ENV_VAR = "PROXYLIGHT_LOG"
DEFAULT_PROFILE = "default"

BUILTIN_DEFAULTS: Dict[str, Any] = {
    "translation": {
        "lambda_l": DEFAULT_LAMBDA_L,
        "lambda_u": DEFAULT_LAMBDA_U,
        "gamma": DEFAULT_GAMMA,
        "mode": "ours",
    },
    "generation": {
        "seed": 0,
        "workers": 0,
        "format": "png",
    },
    "metrics": {
        "task": "saliency",
        "beta_sq": 0.3,
    },
    "logging": {
        "level": "WARNING",
    },
}


def _merge(base: Dict[str, Any], overrides: Dict[str, Any]) -> Dict[str, Any]:
    merged = copy.deepcopy(base)
    for key, value in (overrides or {}).items():
        if isinstance(value, dict) and isinstance(merged.get(key), dict):
            merged[key] = _merge(merged[key], value)
        else:
            merged[key] = value
    return merged


class EnvironmentConfig:
    """
    Resolved configuration of one profile.

    Values come from the built-in defaults, then the profile, then
    environment overrides; CLI flags are applied on top by the caller.
    """

    def __init__(self, config: Optional[Dict[str, Any]] = None, profile: str = DEFAULT_PROFILE):
        """
        Initialize the configuration.

        Args:
            config: Profile section read from the YAML file
            profile: Name of the selected profile
        """
        self.profile = profile
        self.config = _merge(BUILTIN_DEFAULTS, config or {})
        self._apply_environment_overrides()
        ConfigValidator().validate_config(self.config)

    def _apply_environment_overrides(self) -> None:
        """Apply environment variable overrides to configuration."""
        if os.environ.get(LOG_ENV_VAR):
            self.config["logging"]["level"] = os.environ[LOG_ENV_VAR].strip().upper()

    def get_translation_params(self) -> TranslationParams:
        """
        Get translation parameters of the profile.

        Returns:
            TranslationParams: Unvalidated parameters
        """
        section = self.config["translation"]
        return TranslationParams(
            lambda_l=float(section["lambda_l"]),
            lambda_u=float(section["lambda_u"]),
            gamma=float(section["gamma"]),
            mode=section["mode"]
        )

    def get_seed(self) -> int:
        return int(self.config["generation"]["seed"])

    def get_workers(self) -> int:
        """
        Get worker count; 0 means every available core.

        Returns:
            int: Number of worker processes, at least 1
        """
        workers = int(self.config["generation"]["workers"])
        return workers if workers > 0 else (os.cpu_count() or 1)

    def get_image_format(self) -> str:
        return str(self.config["generation"]["format"])

    def get_metrics_task(self) -> str:
        return str(self.config["metrics"]["task"])

    def get_beta_sq(self) -> float:
        return float(self.config["metrics"]["beta_sq"])

    def get_log_level(self) -> str:
        """
        Get logging level.

        Returns:
            str: Logging level name
        """
        return str(self.config["logging"]["level"]).upper()


def load_config(config_path: Optional[str] = None, profile: Optional[str] = None) -> EnvironmentConfig:
    """
    Load one profile from a YAML file.

    Without a path (and without ``PROXYLIGHT_CONFIG``) the built-in
    defaults are used.

    Args:
        config_path: YAML file with one mapping per profile
        profile: Profile name (``PROXYLIGHT_PROFILE`` or ``default`` when omitted)

    Returns:
        EnvironmentConfig: Resolved configuration

    Raises:
        ImageIOError: If the file cannot be read
        ArgumentError: If the profile is missing or a value is invalid
    """
    config_path = config_path or os.environ.get(CONFIG_ENV_VAR)
    profile = profile or os.environ.get(PROFILE_ENV_VAR) or DEFAULT_PROFILE
    if not config_path:
        if profile != DEFAULT_PROFILE:
            raise ArgumentError(f"profile '{profile}' requires a configuration file")
        return EnvironmentConfig(profile=profile)

    try:
        with open(config_path, "r", encoding="utf-8") as f:
            config = yaml.safe_load(f) or {}
    except OSError as e:
        raise ImageIOError(f"Cannot read configuration: {e}", path=str(config_path)) from e
    except yaml.YAMLError as e:
        raise ArgumentError(f"Malformed configuration file {config_path}: {e}") from e

    if not isinstance(config, dict) or profile not in config:
        available = ", ".join(sorted(config)) if isinstance(config, dict) else "none"
        raise ArgumentError(
            f"profile '{profile}' not found in {Path(config_path).name} (available: {available})"
        )
    return EnvironmentConfig(config[profile], profile=profile)
