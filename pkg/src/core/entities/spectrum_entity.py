"""
Frequency-domain data models.

Spectra are stored per channel as amplitude and phase planes on a
centered frequency grid: the DC bin sits at index (H // 2, W // 2).
"""

from dataclasses import dataclass, field
from typing import List, Tuple

import numpy as np

from ...shared.exceptions import ArgumentError


@dataclass(frozen=True)
class ChannelSpectrum:
    """Amplitude (>= 0) and phase (in (-pi, pi]) planes of one channel."""
    amplitude: np.ndarray
    phase: np.ndarray

    def __post_init__(self) -> None:
        if self.amplitude.ndim != 2 or self.amplitude.shape != self.phase.shape:
            raise ArgumentError(
                f"amplitude {self.amplitude.shape} and phase {self.phase.shape} "
                "must be matching 2-D planes"
            )
        if np.any(self.amplitude < 0):
            raise ArgumentError("amplitude must be nonnegative")

    @property
    def height(self) -> int:
        return self.amplitude.shape[0]

    @property
    def width(self) -> int:
        return self.amplitude.shape[1]

    @property
    def center(self) -> Tuple[int, int]:
        """Index of the DC bin."""
        return self.height // 2, self.width // 2


@dataclass(frozen=True)
class ImageSpectrum:
    """Per-channel spectra of one image; all channels share dimensions."""
    channels: List[ChannelSpectrum] = field(default_factory=list)

    def __post_init__(self) -> None:
        if not self.channels:
            raise ArgumentError("ImageSpectrum needs at least one channel")
        shape = self.channels[0].amplitude.shape
        if any(c.amplitude.shape != shape for c in self.channels):
            raise ArgumentError("all channels of an ImageSpectrum must share dimensions")

    @property
    def height(self) -> int:
        return self.channels[0].height

    @property
    def width(self) -> int:
        return self.channels[0].width

    @property
    def amplitude(self) -> np.ndarray:
        """Amplitudes stacked to shape (H, W, C)."""
        return np.stack([c.amplitude for c in self.channels], axis=2)

    @property
    def phase(self) -> np.ndarray:
        """Phases stacked to shape (H, W, C)."""
        return np.stack([c.phase for c in self.channels], axis=2)


@dataclass(frozen=True)
class SpatialField:
    """
    Unclamped real result of an inverse transform.

    Attributes:
        data: Real part, shape (H, W, C)
        imaginary_residual: Largest |imag| discarded when taking the real part
    """
    data: np.ndarray
    imaginary_residual: float = 0.0
