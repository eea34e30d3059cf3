"""
Image decoding, encoding, resizing and synthetic fixtures.

8-bit channel values are treated as linear intensities after division
by 255; no gamma linearization happens before the spectral transform.
"""

import io
import warnings
from typing import Optional

import numpy as np
from PIL import Image, UnidentifiedImageError

from ...core.entities import RasterImage
from ...shared.exceptions import ArgumentError, ImageDecodeError

SUPPORTED_FORMATS = ("PNG", "JPEG")
_FORMAT_ALIASES = {"png": "PNG", "jpeg": "JPEG", "jpg": "JPEG"}
_GRAY_MODES = ("1", "L", "LA")
_COLOR_MODES = ("RGB", "RGBA", "P", "PA", "CMYK", "YCbCr")
JPEG_QUALITY = 95


def normalize_format(image_format: str) -> str:
    """
    Map a user-facing format name to the Pillow format name.

    Raises:
        ArgumentError: For anything other than png / jpeg / jpg
    """
    try:
        return _FORMAT_ALIASES[image_format.strip().lower()]
    except (KeyError, AttributeError):
        raise ArgumentError(f"Unsupported output format '{image_format}' (png or jpeg)") from None


def _sniff_format(data: bytes) -> str:
    if data[:8] == b"\x89PNG\r\n\x1a\n":
        return "PNG"
    if data[:3] == b"\xff\xd8\xff":
        return "JPEG"
    return "unknown"


def decode_image(data: bytes, source: Optional[str] = None) -> RasterImage:
    """
    Decode an 8-bit PNG or JPEG into a RasterImage.

    Each 8-bit value u becomes u / 255; channel order stays R, G, B.
    Alpha channels are dropped and palette images are expanded.

    Args:
        data: Encoded file contents
        source: Label (usually the path) used in error messages

    Returns:
        RasterImage: Decoded image with 1 or 3 channels

    Raises:
        ImageDecodeError: Malformed data, unsupported container or bit depth,
            or dimensions past the Pillow decompression-bomb limit
    """
    try:
        with warnings.catch_warnings():
            warnings.simplefilter("error", Image.DecompressionBombWarning)
            with Image.open(io.BytesIO(data)) as img:
                if img.format not in SUPPORTED_FORMATS:
                    raise ImageDecodeError("unsupported image format", img.format, source)
                img.load()
                if img.mode in _GRAY_MODES:
                    pixels = np.asarray(img.convert("L"), dtype=np.uint8)
                elif img.mode in _COLOR_MODES:
                    pixels = np.asarray(img.convert("RGB"), dtype=np.uint8)
                else:
                    raise ImageDecodeError(
                        f"unsupported pixel mode {img.mode} (8-bit only)", img.format, source
                    )
    except ImageDecodeError:
        raise
    except (UnidentifiedImageError, Image.DecompressionBombError, Image.DecompressionBombWarning,
            OSError, SyntaxError, ValueError) as exc:
        raise ImageDecodeError(
            f"cannot decode image: {exc}", _sniff_format(data), source
        ) from exc

    return RasterImage(pixels.astype(np.float64) / 255.0)


def quantize(img: RasterImage) -> np.ndarray:
    """
    Quantize intensities to bytes: round(clamp(v, 0, 1) * 255), half up.

    Returns:
        np.ndarray: uint8 array of shape (H, W, C)
    """
    scaled = np.clip(img.data, 0.0, 1.0) * 255.0
    return np.floor(scaled + 0.5).astype(np.uint8)


def encode_image(img: RasterImage, image_format: str = "png") -> bytes:
    """
    Encode a RasterImage as PNG (lossless) or JPEG.

    Args:
        img: Image to encode
        image_format: ``png``, ``jpeg`` or ``jpg``

    Returns:
        bytes: Encoded file contents
    """
    pil_format = normalize_format(image_format)
    pixels = quantize(img)
    if img.channels == 1:
        pil_image = Image.fromarray(pixels[:, :, 0])
    else:
        pil_image = Image.fromarray(pixels)

    buffer = io.BytesIO()
    if pil_format == "JPEG":
        pil_image.save(buffer, format="JPEG", quality=JPEG_QUALITY)
    else:
        pil_image.save(buffer, format="PNG")
    return buffer.getvalue()


def _sample_positions(source: int, target: int):
    # Half-pixel centers, clamped at the edges
    coords = (np.arange(target, dtype=np.float64) + 0.5) * (source / target) - 0.5
    coords = np.clip(coords, 0.0, source - 1)
    lower = np.floor(coords).astype(np.intp)
    upper = np.minimum(lower + 1, source - 1)
    return lower, upper, coords - lower


def resize(img: RasterImage, target_h: int, target_w: int) -> RasterImage:
    """
    Bilinearly resize an image with edge-clamped sampling.

    Args:
        img: Image to resize
        target_h: Output height (>= 1)
        target_w: Output width (>= 1)

    Returns:
        RasterImage: Resized image, intensities clamped to [0, 1]

    Raises:
        ArgumentError: If a target dimension is below 1
    """
    if int(target_h) < 1 or int(target_w) < 1:
        raise ArgumentError(f"resize target must be at least 1x1, got {target_h}x{target_w}")
    target_h, target_w = int(target_h), int(target_w)
    if (target_h, target_w) == (img.height, img.width):
        return img

    data = img.data
    top, bottom, row_frac = _sample_positions(img.height, target_h)
    row_frac = row_frac[:, np.newaxis, np.newaxis]
    rows = data[top] * (1.0 - row_frac) + data[bottom] * row_frac

    left, right, col_frac = _sample_positions(img.width, target_w)
    col_frac = col_frac[np.newaxis, :, np.newaxis]
    out = rows[:, left] * (1.0 - col_frac) + rows[:, right] * col_frac

    return RasterImage(np.clip(out, 0.0, 1.0))


def synth_step_image(
    h: int,
    w: int,
    edge_col: int,
    low: float,
    high: float,
    channels: int = 1
) -> RasterImage:
    """
    Vertical step edge: columns left of ``edge_col`` get ``low``, the rest ``high``.

    Used as the reference scene for measuring ringing.
    """
    if not 0 <= edge_col < w:
        raise ArgumentError(f"edge_col must satisfy 0 <= edge_col < {w}, got {edge_col}")
    data = np.full((h, w, channels), float(high))
    data[:, :edge_col, :] = float(low)
    return RasterImage(data)
