"""
Band-pass fusion mask on the centered frequency grid.

The weights are a separable Blackman taper spanning the upper
rectangle R_u, zeroed inside the lower rectangle R_l so the DC
neighbourhood of the well-lit spectrum is kept.
"""

import logging
from functools import lru_cache
from typing import Tuple

import numpy as np

from ...core.entities import FusionMask, TranslationMode, TranslationParams

logger = logging.getLogger(__name__)

BLACKMAN_COEFFICIENTS = (0.42, 0.5, 0.08)
MASK_CACHE_SIZE = 64


def centered_indices(length: int) -> np.ndarray:
    """Signed frequency index of every bin, 0 at ``length // 2``."""
    return np.arange(length) - length // 2


def blackman_factor(indices: np.ndarray, lambda_u: float, length: int) -> np.ndarray:
    """
    One separable factor of the band weights.

    0.42 + 0.5 cos(2 pi m / (lambda_u N)) + 0.08 cos(4 pi m / (lambda_u N)):
    1 at m = 0 and 0 at |m| = lambda_u N / 2.
    """
    a0, a1, a2 = BLACKMAN_COEFFICIENTS
    phase = 2.0 * np.pi * indices / (lambda_u * length)
    return a0 + a1 * np.cos(phase) + a2 * np.cos(2.0 * phase)


def _region(rows: np.ndarray, cols: np.ndarray, fraction: float,
            height: int, width: int) -> np.ndarray:
    """Boolean (H, W) rectangle |m| <= fraction H / 2 and |n| <= fraction W / 2."""
    if fraction <= 0.0:
        return np.zeros((height, width), dtype=bool)
    inside_rows = np.abs(rows) <= fraction * height / 2.0
    inside_cols = np.abs(cols) <= fraction * width / 2.0
    return np.logical_and.outer(inside_rows, inside_cols)


@lru_cache(maxsize=MASK_CACHE_SIZE)
def _alpha_plane(height: int, width: int, lambda_l: float, lambda_u: float,
                 mode: TranslationMode) -> np.ndarray:
    logger.debug("Building fusion mask", extra={
        'height': height, 'width': width, 'lambda_l': lambda_l,
        'lambda_u': lambda_u, 'mode': mode.value
    })
    rows = centered_indices(height)
    cols = centered_indices(width)

    upper = _region(rows, cols, lambda_u, height, width)
    lower = _region(rows, cols, lambda_l, height, width)
    band = upper & ~lower

    if mode in (TranslationMode.FDA, TranslationMode.ABLATION_RECT):
        weights = np.ones((height, width))
    else:
        weights = np.outer(
            blackman_factor(rows, lambda_u, height),
            blackman_factor(cols, lambda_u, width)
        )

    alpha = np.clip(np.where(band, weights, 0.0), 0.0, 1.0)
    alpha.setflags(write=False)
    return alpha


def build_mask(height: int, width: int, params: TranslationParams) -> FusionMask:
    """
    Build the fusion weights for an image of the given size.

    Args:
        height: Image height in pixels
        width: Image width in pixels
        params: Band fractions and mode; validated here

    Returns:
        FusionMask: Read-only weights, flagged degenerate when no bin
        receives a positive weight

    Raises:
        ArgumentError: If the parameters are invalid
    """
    params.ensure_valid()
    alpha = _alpha_plane(int(height), int(width), float(params.effective_lambda_l),
                         float(params.lambda_u), params.mode)
    degenerate = not bool(np.any(alpha > 0.0))
    if degenerate:
        logger.warning("Degenerate frequency band: translation reduces to gamma darkening", extra={
            'height': height, 'width': width, 'lambda_l': params.lambda_l,
            'lambda_u': params.lambda_u, 'mode': params.mode.value
        })
    return FusionMask(alpha=alpha, params=params, degenerate_band=degenerate)


def mask_cache_info() -> Tuple[int, int, int, int]:
    """(hits, misses, maxsize, currsize) of the mask cache."""
    return tuple(_alpha_plane.cache_info())


def clear_mask_cache() -> None:
    _alpha_plane.cache_clear()
