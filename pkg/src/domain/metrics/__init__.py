"""Saliency and depth map metrics."""

from .map_metrics import (
    DEFAULT_BETA_SQ,
    adaptive_threshold,
    depth_metrics,
    f_beta,
    f_measure,
    mae
)

__all__ = [
    'DEFAULT_BETA_SQ',
    'adaptive_threshold',
    'depth_metrics',
    'f_beta',
    'f_measure',
    'mae'
]
