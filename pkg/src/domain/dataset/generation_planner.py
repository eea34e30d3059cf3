"""
Domain service for proxy dataset planning.

This module contains the pure bookkeeping of a generation run: which
exemplar each input gets, where each proxy is written, and how sweep
cells are laid out on a contact sheet. Nothing here touches the disk.
"""

import math
from pathlib import Path
from typing import Callable, List, Optional, Sequence, Tuple

import numpy as np

from ...core.entities import GenerationTask, LowLightPool, RasterImage, TranslationParams
from ...shared.exceptions import ArgumentError
from ..imaging import normalize_format

SHEET_GUTTER = 2
_EXTENSIONS = {"PNG": "png", "JPEG": "jpg"}


class GenerationPlanner:
    """
    Plans generation tasks and contact sheets.

    The exemplar draw is injected so the planner stays free of any
    particular random source.
    """

    def __init__(self, draw_index: Callable[[int, int], int]):
        """
        Initialize the planner.

        Args:
            draw_index: ``(input_index, pool_size) -> exemplar index``
        """
        self.draw_index = draw_index

    @staticmethod
    def output_name(input_path: str, params: TranslationParams, image_format: str = "png") -> str:
        """``<stem>__prx__<mode>__g<gamma>.<ext>`` for one input."""
        extension = _EXTENSIONS[normalize_format(image_format)]
        stem = Path(input_path).stem
        return f"{stem}__prx__{params.mode.short_name}__g{params.gamma:g}.{extension}"

    def output_paths(
        self,
        inputs: Sequence[str],
        out_dir: str,
        params: TranslationParams,
        image_format: str = "png"
    ) -> List[str]:
        """
        Output path per input, in input order.

        Inputs whose names would collide with an earlier one get
        ``__<index>`` appended to the stem.
        """
        used = set()
        paths = []
        for index, input_path in enumerate(inputs):
            name = self.output_name(input_path, params, image_format)
            if name in used:
                base, extension = name.rsplit(".", 1)
                name = f"{base}__{index}.{extension}"
            used.add(name)
            paths.append(str(Path(out_dir) / name))
        return paths

    def choose_exemplar(self, index: int, pool: LowLightPool) -> str:
        """The single exemplar when the pool has one, else a seeded draw."""
        if len(pool) == 1:
            return pool[0]
        return pool[self.draw_index(index, len(pool))]

    def plan(
        self,
        d_well: Sequence[str],
        pool: LowLightPool,
        params: TranslationParams,
        seed: int,
        out_dir: str,
        image_format: str = "png"
    ) -> List[GenerationTask]:
        """
        One task per well-lit input, in input order.

        Raises:
            ArgumentError: If the parameters are invalid
        """
        params.ensure_valid()
        image_format = normalize_format(image_format)
        outputs = self.output_paths(d_well, out_dir, params, image_format)
        return [
            GenerationTask(
                index=index,
                input_path=str(input_path),
                exemplar_path=self.choose_exemplar(index, pool),
                output_path=output_path,
                params=params,
                seed=seed,
                image_format=image_format
            )
            for index, (input_path, output_path) in enumerate(zip(d_well, outputs))
        ]


def sheet_layout(cell_count: int, columns: Optional[int] = None) -> Tuple[int, int]:
    """
    (rows, columns) of a row-major contact sheet.

    Defaults to ceil(sqrt(n)) columns.
    """
    if cell_count < 1:
        raise ArgumentError("a contact sheet needs at least one cell")
    if columns is None:
        columns = math.ceil(math.sqrt(cell_count))
    if columns < 1:
        raise ArgumentError(f"columns must be >= 1, got {columns}")
    columns = min(columns, cell_count)
    return math.ceil(cell_count / columns), columns


def tile_sheet(
    cells: Sequence[RasterImage],
    columns: Optional[int] = None,
    gutter: int = SHEET_GUTTER
) -> Tuple[RasterImage, List[Tuple[int, int]]]:
    """
    Tile equally sized images row-major with black gutters between them.

    Args:
        cells: Images of identical height and width
        columns: Cells per row (default ceil(sqrt(n)))
        gutter: Gutter width in pixels between neighbouring cells

    Returns:
        Tuple of the sheet and the (row, column) of every cell; unused
        trailing positions stay black
    """
    rows, columns = sheet_layout(len(cells), columns)
    height, width = cells[0].height, cells[0].width
    if any((c.height, c.width) != (height, width) for c in cells):
        raise ArgumentError("all contact sheet cells must share dimensions")
    channels = max(c.channels for c in cells)

    sheet = np.zeros((rows * height + (rows - 1) * gutter,
                      columns * width + (columns - 1) * gutter,
                      channels))
    positions = []
    for index, cell in enumerate(cells):
        row, column = divmod(index, columns)
        top = row * (height + gutter)
        left = column * (width + gutter)
        sheet[top:top + height, left:left + width] = cell.with_channels(channels).data
        positions.append((row, column))
    return RasterImage(sheet), positions
