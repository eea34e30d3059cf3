"""
2-D discrete Fourier analysis and synthesis on a centered grid.

Conventions: the forward transform is unnormalized, the inverse
carries 1 / (H * W), and spectra are shifted so the DC bin sits at
index (H // 2, W // 2). Every channel is transformed independently.
"""

import numpy as np

from ...core.entities import ChannelSpectrum, ImageSpectrum, RasterImage, SpatialField
from ...shared.exceptions import ArgumentError

NAIVE_DFT_MAX_PIXELS = 4096
_AXES = (0, 1)


def _wrap_phase(phase: np.ndarray) -> np.ndarray:
    # np.angle can return -pi; fold it onto +pi so phase lies in (-pi, pi]
    return np.where(phase <= -np.pi, phase + 2.0 * np.pi, phase)


def _split(centered: np.ndarray) -> ImageSpectrum:
    amplitude = np.abs(centered)
    phase = _wrap_phase(np.angle(centered))
    return ImageSpectrum([
        ChannelSpectrum(amplitude=amplitude[:, :, c], phase=phase[:, :, c])
        for c in range(centered.shape[2])
    ])


def forward_centered(data: np.ndarray) -> np.ndarray:
    """Unnormalized FFT of an (H, W, C) array, shifted so DC is centered."""
    return np.fft.fftshift(np.fft.fft2(data, axes=_AXES), axes=_AXES)


def dft2(img: RasterImage) -> ImageSpectrum:
    """
    Decompose every channel into centered amplitude and phase planes.

    Args:
        img: Image to analyse

    Returns:
        ImageSpectrum: One ChannelSpectrum per image channel
    """
    return _split(forward_centered(img.data))


def synthesize(amplitude: np.ndarray, phase: np.ndarray) -> SpatialField:
    """
    Inverse transform of centered (H, W, C) amplitude and phase arrays.

    The spectrum is not re-symmetrized: the real part is returned and
    the discarded imaginary magnitude is reported for diagnostics.
    """
    centered = amplitude * np.exp(1j * phase)
    spatial = np.fft.ifft2(np.fft.ifftshift(centered, axes=_AXES), axes=_AXES)
    residual = float(np.max(np.abs(spatial.imag))) if spatial.size else 0.0
    return SpatialField(data=spatial.real, imaginary_residual=residual)


def idft2(spec: ImageSpectrum) -> SpatialField:
    """
    Reconstruct the (unclamped) real field of a spectrum.

    Args:
        spec: Centered per-channel spectrum

    Returns:
        SpatialField: Real part of shape (H, W, C) and imaginary residual
    """
    return synthesize(spec.amplitude, spec.phase)


def naive_dft2(img: RasterImage) -> ImageSpectrum:
    """
    Direct evaluation of the DFT double sum at every bin.

    Quartic in the pixel count, so it is only meant as an independent
    check of ``dft2`` on small images.

    Raises:
        ArgumentError: If H * W exceeds 4096
    """
    height, width, _ = img.shape
    if height * width > NAIVE_DFT_MAX_PIXELS:
        raise ArgumentError(
            f"naive_dft2 is limited to {NAIVE_DFT_MAX_PIXELS} pixels, got {height}x{width}"
        )

    rows = np.arange(height)
    cols = np.arange(width)
    # Integer products reduced modulo the length keep the exponents small
    col_kernel = np.exp(-2j * np.pi * (np.outer(cols, cols) % width) / width)

    raw = np.empty(img.shape, dtype=np.complex128)
    for k in range(height):
        row_kernel = np.exp(-2j * np.pi * ((k * rows) % height) / height)
        raw[k] = np.einsum("mnc,m,ln->lc", img.data, row_kernel, col_kernel)

    return _split(np.fft.fftshift(raw, axes=_AXES))


def amplitude_to_image(channel: ChannelSpectrum) -> RasterImage:
    """
    Log-scaled grayscale view of an amplitude plane, for inspection.

    Returns:
        RasterImage: log1p(A) / max(log1p(A)), one channel
    """
    logged = np.log1p(channel.amplitude)
    peak = float(logged.max())
    if peak > 0:
        logged = logged / peak
    return RasterImage(logged)
