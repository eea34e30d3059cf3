"""
Service interface definitions for proxylight.

This module defines the abstract interfaces the application services
implement, so the CLI (and tests) depend on contracts rather than on
concrete orchestration classes.
"""

from abc import ABC, abstractmethod
from typing import List, Optional, Sequence

from ..entities import (
    DatasetManifest,
    EvaluationReport,
    LowLightPool,
    RasterImage,
    SweepResult,
    TranslationParams,
    TranslationResult
)


class TranslationServiceInterface(ABC):
    """Interface for single-image translation and parameter sweeps."""

    @abstractmethod
    def translate_images(
        self,
        i_well: RasterImage,
        i_low: RasterImage,
        params: TranslationParams
    ) -> TranslationResult:
        """
        Translate one well-lit image with one exemplar.

        Args:
            i_well: Well-lit image
            i_low: Low-light exemplar (resized when its size differs)
            params: Translation parameters

        Returns:
            TranslationResult: Proxy image and diagnostics
        """
        pass

    @abstractmethod
    def translate_file(
        self,
        well_path: str,
        low_path: str,
        out_path: str,
        params: TranslationParams,
        image_format: str = "png"
    ) -> TranslationResult:
        """
        Translate image files and write the proxy.

        Args:
            well_path: Well-lit image file
            low_path: Exemplar image file
            out_path: Destination of the proxy
            params: Translation parameters
            image_format: png or jpeg

        Returns:
            TranslationResult: Proxy image and diagnostics
        """
        pass

    @abstractmethod
    def sweep(
        self,
        well_path: str,
        low_path: str,
        grid: Sequence[TranslationParams],
        columns: Optional[int] = None
    ) -> SweepResult:
        """
        Translate one image pair under every parameter setting and tile the results.

        Args:
            well_path: Well-lit image file
            low_path: Exemplar image file
            grid: Parameter settings, one per cell
            columns: Cells per row

        Returns:
            SweepResult: Contact sheet and cell map
        """
        pass


class DatasetServiceInterface(ABC):
    """Interface for proxy dataset generation."""

    @abstractmethod
    def generate(
        self,
        d_well: Sequence[str],
        pool: LowLightPool,
        params: TranslationParams,
        seed: int,
        out_dir: str
    ) -> DatasetManifest:
        """
        Produce one proxy per well-lit input.

        Args:
            d_well: Well-lit image files
            pool: Low-light exemplar files
            params: Translation parameters
            seed: Base seed of the exemplar draws
            out_dir: Output directory for proxies and the manifest

        Returns:
            DatasetManifest: Entries and per-input failures
        """
        pass


class EvaluationServiceInterface(ABC):
    """Interface for map evaluation over directories."""

    @abstractmethod
    def evaluate(
        self,
        pred_files: List[str],
        gt_files: List[str],
        task: str = "saliency"
    ) -> EvaluationReport:
        """
        Score predictions against ground truth matched by file stem.

        Args:
            pred_files: Prediction maps
            gt_files: Ground-truth maps
            task: ``saliency`` or ``depth``

        Returns:
            EvaluationReport: Per-pair records, skips and summary
        """
        pass
