"""
Application service for single-image translation and sweeps.

This service wires the image repository to the band-fusion domain
functions and implements the TranslationServiceInterface contract.
"""

import logging
from pathlib import Path
from typing import Optional, Sequence

from ...core.entities import (
    RasterImage,
    SweepCell,
    SweepResult,
    TranslationParams,
    TranslationResult
)
from ...core.interfaces import TranslationServiceInterface
from ...domain.dataset import tile_sheet
from ...domain.fusion import translate
from ...domain.spectrum import amplitude_to_image
from ...infrastructure.io import ImageRepository, write_jsonl
from ...shared.exceptions import ArgumentError

logger = logging.getLogger(__name__)


class TranslationApplicationService(TranslationServiceInterface):
    """
    Application service for translation operations.

    Loads images through the repository, delegates the numeric work
    to the fusion domain, and writes proxies and contact sheets.
    """

    def __init__(self, repository: Optional[ImageRepository] = None):
        """
        Initialize the service.

        Args:
            repository: Image file access (a default one when omitted)
        """
        self.repository = repository or ImageRepository()

    def translate_images(
        self,
        i_well: RasterImage,
        i_low: RasterImage,
        params: TranslationParams
    ) -> TranslationResult:
        """Translate in-memory images."""
        return translate(i_well, i_low, params)

    def translate_file(
        self,
        well_path: str,
        low_path: str,
        out_path: str,
        params: TranslationParams,
        image_format: str = "png"
    ) -> TranslationResult:
        """Translate image files and write the proxy."""
        params.ensure_valid()
        i_well = self.repository.load(well_path)
        i_low = self.repository.load(low_path)
        result = self.translate_images(i_well, i_low, params)
        self.repository.save(result.image, out_path, image_format)
        logger.info("Wrote proxy image", extra={
            'well': well_path, 'low': low_path, 'out': out_path,
            'degenerate_band': result.degenerate_band, **params.to_dict()
        })
        return result

    def dump_spectrum(self, result: TranslationResult, path: str) -> str:
        """
        Write the log-scaled fused amplitude of channel 0 as a PNG.

        Returns:
            str: Written path
        """
        if result.spectrum is None:
            raise ArgumentError("translation result carries no spectrum")
        return self.repository.save(amplitude_to_image(result.spectrum.channels[0]), path, "png")

    def sweep(
        self,
        well_path: str,
        low_path: str,
        grid: Sequence[TranslationParams],
        columns: Optional[int] = None
    ) -> SweepResult:
        """Translate one image pair under every setting and tile the results."""
        if not grid:
            raise ArgumentError("sweep grid must contain at least one parameter setting")
        for params in grid:
            params.ensure_valid()

        i_well = self.repository.load(well_path)
        i_low = self.repository.load(low_path)
        results = [self.translate_images(i_well, i_low, params) for params in grid]

        sheet, positions = tile_sheet([r.image for r in results], columns=columns)
        cells = [
            SweepCell(index=index, row=row, column=column, params=params,
                      degenerate_band=result.degenerate_band)
            for index, ((row, column), params, result) in enumerate(zip(positions, grid, results))
        ]
        logger.info("Built contact sheet", extra={'cells': len(cells), 'well': well_path})
        return SweepResult(sheet=sheet, cells=cells,
                           cell_height=i_well.height, cell_width=i_well.width)

    def save_sweep(self, result: SweepResult, out_path: str, image_format: str = "png") -> str:
        """
        Write the contact sheet and ``<out stem>.cells.jsonl`` beside it.

        Returns:
            str: Path of the cell manifest
        """
        self.repository.save(result.sheet, out_path, image_format)
        target = Path(out_path)
        return write_jsonl(target.with_name(target.stem + ".cells.jsonl"),
                           (cell.to_dict() for cell in result.cells))
