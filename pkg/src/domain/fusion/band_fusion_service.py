"""
Amplitude fusion and proxy reconstruction.

A proxy keeps the phase of the well-lit image, takes its amplitude as
a per-bin blend with a real low-light exemplar, and is darkened by a
gamma power after inversion.
"""

import logging
from typing import Iterable, List, Optional

import numpy as np

from .mask_builder import build_mask
from ..imaging import resize
from ..spectrum import dft2, synthesize
from ...core.entities import (
    ABLATION_GAMMA,
    ChannelSpectrum,
    FusionMask,
    ImageSpectrum,
    RasterImage,
    TranslationMode,
    TranslationParams,
    TranslationResult
)
from ...shared.exceptions import ArgumentError

logger = logging.getLogger(__name__)

DEGENERATE_BAND_WARNING = "degenerate frequency band: output is gamma darkening only"
REGION_TOLERANCE = 1.0 / 510.0


def fuse_amplitude(a_well: np.ndarray, a_low: np.ndarray, mask: FusionMask) -> np.ndarray:
    """
    Blend two amplitude planes bin by bin: alpha * a_low + (1 - alpha) * a_well.

    Args:
        a_well: (H, W) or (H, W, C) amplitudes of the well-lit image
        a_low: Amplitudes of the exemplar, same shape as ``a_well``
        mask: Weights of shape (H, W), shared by every channel

    Returns:
        np.ndarray: Fused amplitudes, same shape as the inputs

    Raises:
        ArgumentError: If the shapes disagree
    """
    a_well = np.asarray(a_well, dtype=np.float64)
    a_low = np.asarray(a_low, dtype=np.float64)
    if a_well.shape != a_low.shape:
        raise ArgumentError(f"amplitude shapes differ: {a_well.shape} vs {a_low.shape}")
    if a_well.shape[:2] != mask.alpha.shape:
        raise ArgumentError(
            f"mask shape {mask.alpha.shape} does not match amplitude shape {a_well.shape[:2]}"
        )
    alpha = mask.alpha if a_well.ndim == 2 else mask.alpha[:, :, np.newaxis]
    return alpha * a_low + (1.0 - alpha) * a_well


def match_exemplar(i_low: RasterImage, i_well: RasterImage) -> RasterImage:
    """Resize the exemplar to the well-lit size and match its channel count."""
    if (i_low.height, i_low.width) != (i_well.height, i_well.width):
        i_low = resize(i_low, i_well.height, i_well.width)
    return i_low.with_channels(i_well.channels)


def translate(i_well: RasterImage, i_low: RasterImage,
              params: Optional[TranslationParams] = None) -> TranslationResult:
    """
    Turn a well-lit image into a proxy low-light image.

    The exemplar is resized to the well-lit dimensions first when
    they differ. Both images are decomposed per channel, amplitudes
    are fused under the mode's mask, and the result is inverted with
    the well-lit phase, clamped to [0, 1] and raised to ``gamma``.

    Args:
        i_well: Well-lit source image
        i_low: Real low-light exemplar
        params: Translation parameters; defaults when omitted

    Returns:
        TranslationResult: Proxy image, the mask used, and diagnostics

    Raises:
        ArgumentError: If the parameters are invalid
    """
    params = (params or TranslationParams()).ensure_valid()
    i_low = match_exemplar(i_low, i_well)

    well = dft2(i_well)
    low = dft2(i_low)
    mask = build_mask(i_well.height, i_well.width, params)

    fused = fuse_amplitude(well.amplitude, low.amplitude, mask)
    phase = well.phase
    spatial = synthesize(fused, phase)
    proxy = np.clip(spatial.data, 0.0, 1.0) ** params.gamma

    spectrum = ImageSpectrum([
        ChannelSpectrum(amplitude=fused[:, :, c], phase=phase[:, :, c])
        for c in range(fused.shape[2])
    ])
    warnings = [DEGENERATE_BAND_WARNING] if mask.degenerate_band else []
    logger.debug("Translated image", extra={
        'height': i_well.height, 'width': i_well.width,
        'imaginary_residual': spatial.imaginary_residual, **params.to_dict()
    })
    return TranslationResult(
        image=RasterImage(proxy),
        mask=mask,
        imaginary_residual=spatial.imaginary_residual,
        warnings=warnings,
        spectrum=spectrum
    )


def ringing_energy(img: RasterImage, reference_step: RasterImage,
                   region_tolerance: float = REGION_TOLERANCE) -> float:
    """
    Mean squared excursion of ``img`` beyond the extrema of each constant
    region of a reference step.

    A constant region is the set of reference pixels of one channel whose
    values agree to within ``region_tolerance``. Every region is bounded by
    its own minimum and maximum, so a dip inside the bright plateau counts
    even when it stays above the dark plateau. Per pixel the energy is
    max(0, v - high)^2 + max(0, low - v)^2 summed over channels.

    Raises:
        ArgumentError: If the shapes differ or the tolerance is not positive
    """
    if img.shape != reference_step.shape:
        raise ArgumentError(f"image shape {img.shape} does not match reference {reference_step.shape}")
    if not region_tolerance > 0:
        raise ArgumentError(f"region_tolerance must be > 0, got {region_tolerance}")
    low = np.empty_like(reference_step.data)
    high = np.empty_like(reference_step.data)
    for c in range(reference_step.channels):
        ref = reference_step.data[:, :, c]
        _, labels = np.unique(np.round(ref / region_tolerance), return_inverse=True)
        labels = labels.reshape(ref.shape)
        count = int(labels.max()) + 1
        region_low = np.full(count, np.inf)
        region_high = np.full(count, -np.inf)
        np.minimum.at(region_low, labels, ref)
        np.maximum.at(region_high, labels, ref)
        low[:, :, c] = region_low[labels]
        high[:, :, c] = region_high[labels]
    over = np.maximum(0.0, img.data - high)
    under = np.maximum(0.0, low - img.data)
    per_pixel = (over ** 2 + under ** 2).sum(axis=2)
    return float(per_pixel.mean())


def ablation_grid(gamma: float = ABLATION_GAMMA) -> List[TranslationParams]:
    """
    The four ablation settings, in display order.

    Rectangular low-pass, windowed low-pass, windowed band-pass, and
    windowed band-pass with a wide upper band.
    """
    return [
        TranslationParams(lambda_l=0.0, lambda_u=0.1, gamma=gamma, mode=TranslationMode.ABLATION_RECT),
        TranslationParams(lambda_l=0.0, lambda_u=0.1, gamma=gamma, mode=TranslationMode.OURS),
        TranslationParams(lambda_l=0.01, lambda_u=0.1, gamma=gamma, mode=TranslationMode.OURS),
        TranslationParams(lambda_l=0.01, lambda_u=0.5, gamma=gamma, mode=TranslationMode.OURS),
    ]


def gamma_series(i_well: RasterImage, i_low: RasterImage, gammas: Iterable[float],
                 params: Optional[TranslationParams] = None) -> List[float]:
    """
    Mean proxy intensity for each gamma, all other parameters fixed.

    The clamped linear proxy is computed once and raised to each power.
    """
    base = (params or TranslationParams()).replace(gamma=1.0)
    linear = translate(i_well, i_low, base).image.data
    means = []
    for gamma in gammas:
        base.replace(gamma=gamma).ensure_valid()
        means.append(float((linear ** gamma).mean()))
    return means
