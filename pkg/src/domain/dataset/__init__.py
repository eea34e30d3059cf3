"""Planning of generation runs and contact sheets."""

from .generation_planner import SHEET_GUTTER, GenerationPlanner, sheet_layout, tile_sheet

__all__ = ['SHEET_GUTTER', 'GenerationPlanner', 'sheet_layout', 'tile_sheet']
