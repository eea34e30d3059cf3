"""
Test configuration and fixtures for proxylight tests.

Scenes are synthetic but "natural-like": smooth random fields plus a
brightness ramp rather than white noise, so their spectra
fall off with frequency the way photographs do.
"""

import io
import logging
import struct
import zlib
from pathlib import Path
from typing import Callable, List

import numpy as np
import pytest
from PIL import Image

from src.core.entities import RasterImage, TranslationParams
from src.domain.fusion import clear_mask_cache
from src.domain.imaging import encode_image, resize


def smooth_field(rng: np.random.Generator, h: int, w: int, channels: int = 1,
                 coarse: int = 8) -> np.ndarray:
    """Bilinearly upsampled coarse noise, normalised to [0, 1]."""
    coarse_img = RasterImage(rng.random((coarse, coarse, channels)))
    field = resize(coarse_img, h, w).data.copy()
    field -= field.min()
    peak = field.max()
    return field / peak if peak > 0 else field


def make_scene(seed: int, h: int = 64, w: int = 64, channels: int = 3) -> RasterImage:
    """Well-lit natural-like scene with values in roughly [0.15, 0.9]."""
    rng = np.random.default_rng(seed)
    base = smooth_field(rng, h, w, channels, coarse=6)
    detail = smooth_field(rng, h, w, channels, coarse=24)
    ramp = np.linspace(0.0, 1.0, w)[np.newaxis, :, np.newaxis]
    data = 0.15 + 0.75 * (0.55 * base + 0.3 * detail + 0.15 * ramp)
    return RasterImage(np.clip(data, 0.0, 1.0))


def make_dark_exemplar(seed: int, h: int = 64, w: int = 64, channels: int = 3) -> RasterImage:
    """Low-light natural-like scene with mean intensity below 0.1."""
    rng = np.random.default_rng(10_000 + seed)
    base = smooth_field(rng, h, w, channels, coarse=5)
    detail = smooth_field(rng, h, w, channels, coarse=20)
    data = 0.01 + 0.12 * (0.7 * base + 0.3 * detail) ** 1.5
    return RasterImage(np.clip(data, 0.0, 1.0))


def png_bytes(pixels: np.ndarray) -> bytes:
    """Encode a uint8 (H, W) or (H, W, 3) array with Pillow directly."""
    buffer = io.BytesIO()
    Image.fromarray(pixels.astype(np.uint8)).save(buffer, format="PNG")
    return buffer.getvalue()


def _png_chunk(kind: bytes, payload: bytes) -> bytes:
    return struct.pack(">I", len(payload)) + kind + payload + struct.pack(">I", zlib.crc32(kind + payload))


def oversized_png(width: int, height: int) -> bytes:
    """A tiny PNG whose header claims ``width`` x ``height`` RGB pixels."""
    header = struct.pack(">IIBBBBB", width, height, 8, 2, 0, 0, 0)
    return (b"\x89PNG\r\n\x1a\n" + _png_chunk(b"IHDR", header)
            + _png_chunk(b"IDAT", zlib.compress(b"\x00" * 16)) + _png_chunk(b"IEND", b""))


@pytest.fixture(autouse=True)
def _reset_package_logger():
    """Undo configure_logging so caplog sees package records again."""
    yield
    package = logging.getLogger("src")
    for handler in [h for h in package.handlers if getattr(h, "_proxylight", False)]:
        package.removeHandler(handler)
    package.propagate = True
    package.setLevel(logging.NOTSET)


@pytest.fixture(autouse=True)
def _clean_environment(monkeypatch):
    """Ignore any PROXYLIGHT_* variables of the calling shell."""
    for name in ("PROXYLIGHT_CONFIG", "PROXYLIGHT_PROFILE", "PROXYLIGHT_LOG"):
        monkeypatch.delenv(name, raising=False)


@pytest.fixture(autouse=True)
def _fresh_mask_cache():
    """Each test starts with an empty mask cache."""
    clear_mask_cache()
    yield
    clear_mask_cache()


@pytest.fixture
def scene_factory() -> Callable[..., RasterImage]:
    return make_scene


@pytest.fixture
def dark_factory() -> Callable[..., RasterImage]:
    return make_dark_exemplar


@pytest.fixture
def scene() -> RasterImage:
    return make_scene(0)


@pytest.fixture
def dark_exemplar() -> RasterImage:
    return make_dark_exemplar(0)


@pytest.fixture
def default_params() -> TranslationParams:
    return TranslationParams()


@pytest.fixture
def write_png(tmp_path) -> Callable[[RasterImage, str], str]:
    """Write a RasterImage as PNG under tmp_path and return the path."""
    def _write(image: RasterImage, relative: str) -> str:
        target = Path(tmp_path) / relative
        target.parent.mkdir(parents=True, exist_ok=True)
        target.write_bytes(encode_image(image, "png"))
        return str(target)
    return _write


@pytest.fixture
def dataset_dirs(tmp_path, write_png):
    """Six well-lit scenes of mixed sizes and a pool of three dark exemplars."""
    well: List[str] = []
    for i in range(6):
        h, w = (48, 64) if i % 2 else (40, 40)
        well.append(write_png(make_scene(100 + i, h, w), f"well/img_{i:02d}.png"))
    pool = [write_png(make_dark_exemplar(i, 56, 56), f"pool/dark_{i}.png") for i in range(3)]
    return {
        'well_dir': str(tmp_path / "well"),
        'pool_dir': str(tmp_path / "pool"),
        'well': well,
        'pool': pool,
        'root': tmp_path
    }


@pytest.fixture
def pillow_png() -> Callable[[np.ndarray], bytes]:
    return png_bytes


@pytest.fixture
def huge_png() -> bytes:
    """Header claims 20000 x 10000 pixels, past Pillow's decompression-bomb limit."""
    return oversized_png(20000, 10000)
