"""
Core entities module for proxylight.

This module provides access to all core entity classes used throughout
the application.
"""

from .image_entity import GrayMap, RasterImage
from .spectrum_entity import ChannelSpectrum, ImageSpectrum, SpatialField
from .translation_entity import (
    ABLATION_GAMMA,
    DEFAULT_GAMMA,
    DEFAULT_LAMBDA_L,
    DEFAULT_LAMBDA_U,
    EXTREME_GAMMA,
    FusionMask,
    TranslationMode,
    TranslationParams,
    TranslationParamsValidator,
    TranslationResult
)
from .dataset_entity import (
    MANIFEST_FIELDS,
    DatasetManifest,
    FailureRecord,
    GenerationTask,
    LowLightPool,
    ManifestEntry,
    SweepCell,
    SweepResult
)
from .metrics_entity import DepthMetrics, EvaluationReport, FMeasureResult

__all__ = [
    'RasterImage',
    'GrayMap',
    'ChannelSpectrum',
    'ImageSpectrum',
    'SpatialField',
    'DEFAULT_LAMBDA_L',
    'DEFAULT_LAMBDA_U',
    'DEFAULT_GAMMA',
    'EXTREME_GAMMA',
    'ABLATION_GAMMA',
    'TranslationMode',
    'TranslationParams',
    'TranslationParamsValidator',
    'FusionMask',
    'TranslationResult',
    'MANIFEST_FIELDS',
    'LowLightPool',
    'GenerationTask',
    'ManifestEntry',
    'FailureRecord',
    'DatasetManifest',
    'SweepCell',
    'SweepResult',
    'FMeasureResult',
    'DepthMetrics',
    'EvaluationReport'
]
