"""Pixel-domain operations: codec, resizing, synthetic scenes."""

from .raster_ops import (
    SUPPORTED_FORMATS,
    decode_image,
    encode_image,
    normalize_format,
    quantize,
    resize,
    synth_step_image
)

__all__ = [
    'SUPPORTED_FORMATS',
    'decode_image',
    'encode_image',
    'normalize_format',
    'quantize',
    'resize',
    'synth_step_image'
]
