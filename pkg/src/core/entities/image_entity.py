"""
Pixel-domain data models.

RasterImage carries every image through the pipeline (well-lit
inputs, low-light exemplars, proxies); GrayMap carries the single
channel maps compared by the evaluation metrics.
"""

from dataclasses import dataclass
from typing import Any, Dict

import numpy as np

from ...shared.exceptions import ArgumentError

# Tolerance for values produced by float arithmetic that should sit on [0, 1]
RANGE_TOLERANCE = 1e-12


@dataclass(frozen=True)
class RasterImage:
    """
    H x W x C array of channel intensities in [0, 1].

    ``data`` is always a float64 array of shape (height, width, channels)
    with 1 or 3 channels. Construction validates the shape and range
    and makes the array read-only, so an image can be shared between
    threads and cached without copying.
    """
    data: np.ndarray

    def __post_init__(self) -> None:
        data = np.asarray(self.data, dtype=np.float64)
        if data.ndim == 2:
            data = data[:, :, np.newaxis]
        if data.ndim != 3:
            raise ArgumentError(f"RasterImage needs a 2-D or 3-D array, got {data.ndim}-D")
        height, width, channels = data.shape
        if height < 1 or width < 1:
            raise ArgumentError(f"RasterImage dimensions must be >= 1, got {height}x{width}")
        if channels not in (1, 3):
            raise ArgumentError(f"RasterImage supports 1 or 3 channels, got {channels}")
        if not np.all(np.isfinite(data)):
            raise ArgumentError("RasterImage intensities must be finite")
        lo, hi = float(data.min()), float(data.max())
        if lo < -RANGE_TOLERANCE or hi > 1.0 + RANGE_TOLERANCE:
            raise ArgumentError(f"RasterImage intensities must lie in [0, 1], got [{lo}, {hi}]")
        if lo < 0.0 or hi > 1.0:
            data = np.clip(data, 0.0, 1.0)
        if data is self.data:
            data = data.copy()
        data.setflags(write=False)
        object.__setattr__(self, "data", data)

    @property
    def height(self) -> int:
        return self.data.shape[0]

    @property
    def width(self) -> int:
        return self.data.shape[1]

    @property
    def channels(self) -> int:
        return self.data.shape[2]

    @property
    def shape(self) -> tuple:
        return self.data.shape

    def mean(self) -> float:
        """Mean intensity over all pixels and channels."""
        return float(self.data.mean())

    def with_channels(self, channels: int) -> "RasterImage":
        """
        Return this image with the requested channel count.

        Grayscale is replicated to RGB; RGB is averaged to grayscale.

        Args:
            channels: Target channel count (1 or 3)

        Returns:
            RasterImage: Converted image (self when already matching)
        """
        if channels == self.channels:
            return self
        if channels == 3:
            return RasterImage(np.repeat(self.data, 3, axis=2))
        if channels == 1:
            return RasterImage(self.data.mean(axis=2, keepdims=True))
        raise ArgumentError(f"Unsupported channel count: {channels}")

    def to_dict(self) -> Dict[str, Any]:
        """Summary representation (dimensions and mean, not pixels)."""
        return {
            'height': self.height,
            'width': self.width,
            'channels': self.channels,
            'mean': self.mean()
        }


@dataclass(frozen=True)
class GrayMap:
    """
    Single-channel H x W map of predicted or ground-truth values.

    Saliency maps are bounded to [0, 1]. Depth maps are positive reals
    whose ratios may exceed 1, so they are built with ``bounded=False``.
    """
    values: np.ndarray
    bounded: bool = True

    def __post_init__(self) -> None:
        values = np.asarray(self.values, dtype=np.float64)
        if values.ndim == 3 and values.shape[2] == 1:
            values = values[:, :, 0]
        if values.ndim == 1:
            values = values[np.newaxis, :]
        if values.ndim != 2 or values.shape[0] < 1 or values.shape[1] < 1:
            raise ArgumentError(f"GrayMap needs a non-empty 2-D array, got shape {values.shape}")
        if not np.all(np.isfinite(values)):
            raise ArgumentError("GrayMap values must be finite")
        if self.bounded and (values.min() < 0.0 or values.max() > 1.0):
            raise ArgumentError("GrayMap values must lie in [0, 1]")
        values = values.copy()
        values.setflags(write=False)
        object.__setattr__(self, "values", values)

    @classmethod
    def from_image(cls, image: RasterImage, bounded: bool = True) -> "GrayMap":
        """Collapse a RasterImage to one channel (channel mean for RGB)."""
        return cls(image.with_channels(1).data[:, :, 0], bounded=bounded)

    @property
    def height(self) -> int:
        return self.values.shape[0]

    @property
    def width(self) -> int:
        return self.values.shape[1]

    @property
    def shape(self) -> tuple:
        return self.values.shape
