"""Profiled YAML configuration with environment overrides."""

from .config_validator import ConfigValidator
from .environment_config import (
    BUILTIN_DEFAULTS,
    CONFIG_ENV_VAR,
    DEFAULT_PROFILE,
    LOG_ENV_VAR,
    PROFILE_ENV_VAR,
    EnvironmentConfig,
    load_config
)

__all__ = [
    'BUILTIN_DEFAULTS',
    'CONFIG_ENV_VAR',
    'DEFAULT_PROFILE',
    'LOG_ENV_VAR',
    'PROFILE_ENV_VAR',
    'ConfigValidator',
    'EnvironmentConfig',
    'load_config'
]
