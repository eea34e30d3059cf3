"""Centered 2-D Fourier analysis and synthesis."""

from .fourier_service import (
    NAIVE_DFT_MAX_PIXELS,
    amplitude_to_image,
    dft2,
    forward_centered,
    idft2,
    naive_dft2,
    synthesize
)

__all__ = [
    'NAIVE_DFT_MAX_PIXELS',
    'amplitude_to_image',
    'dft2',
    'forward_centered',
    'idft2',
    'naive_dft2',
    'synthesize'
]
