"""Band-pass amplitude fusion: masks, translation and diagnostics."""

from .band_fusion_service import (
    DEGENERATE_BAND_WARNING,
    ablation_grid,
    fuse_amplitude,
    gamma_series,
    match_exemplar,
    ringing_energy,
    translate
)
from .mask_builder import (
    blackman_factor,
    build_mask,
    centered_indices,
    clear_mask_cache,
    mask_cache_info
)

__all__ = [
    'DEGENERATE_BAND_WARNING',
    'ablation_grid',
    'blackman_factor',
    'build_mask',
    'centered_indices',
    'clear_mask_cache',
    'fuse_amplitude',
    'gamma_series',
    'mask_cache_info',
    'match_exemplar',
    'ringing_energy',
    'translate'
]
