"""
Data models for proxy dataset generation.

These record what a generation run did: which exemplar each well-lit
image was paired with, under which parameters, where the proxy was
written, and which inputs failed.
"""

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence

from .image_entity import RasterImage
from .translation_entity import TranslationParams
from ...shared.exceptions import ArgumentError

# Field order of a manifest line
MANIFEST_FIELDS = (
    "input_path", "exemplar_path", "lambda_l", "lambda_u", "gamma",
    "mode", "seed", "output_path", "degenerate_band"
)


@dataclass(frozen=True)
class LowLightPool:
    """Ordered, nonempty pool of real low-light exemplar sources."""
    exemplars: Sequence[str]

    def __post_init__(self) -> None:
        exemplars = tuple(str(p) for p in self.exemplars)
        if not exemplars:
            raise ArgumentError("the low-light pool needs at least 1 real low-light image")
        object.__setattr__(self, "exemplars", exemplars)

    def __len__(self) -> int:
        return len(self.exemplars)

    def __getitem__(self, index: int) -> str:
        return self.exemplars[index]


@dataclass(frozen=True)
class GenerationTask:
    """One unit of work: translate one well-lit input with one exemplar."""
    index: int
    input_path: str
    exemplar_path: str
    output_path: str
    params: TranslationParams
    seed: int
    image_format: str = "png"


@dataclass(frozen=True)
class ManifestEntry:
    """One successfully generated proxy image."""
    input_path: str
    exemplar_path: str
    params: TranslationParams
    seed: int
    output_path: str
    degenerate_band: bool = False

    def to_dict(self) -> Dict[str, Any]:
        """Flat dictionary in manifest field order."""
        return {
            'input_path': self.input_path,
            'exemplar_path': self.exemplar_path,
            'lambda_l': self.params.lambda_l,
            'lambda_u': self.params.lambda_u,
            'gamma': self.params.gamma,
            'mode': self.params.mode.value,
            'seed': self.seed,
            'output_path': self.output_path,
            'degenerate_band': self.degenerate_band
        }

    def to_json(self) -> str:
        """Serialize as one manifest line (no trailing newline)."""
        return json.dumps(self.to_dict(), ensure_ascii=False)

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "ManifestEntry":
        """Rebuild an entry from a parsed manifest line."""
        missing = [name for name in MANIFEST_FIELDS if name not in data]
        if missing:
            raise ArgumentError(f"manifest line is missing fields: {', '.join(missing)}")
        return cls(
            input_path=data['input_path'],
            exemplar_path=data['exemplar_path'],
            params=TranslationParams(
                lambda_l=float(data['lambda_l']),
                lambda_u=float(data['lambda_u']),
                gamma=float(data['gamma']),
                mode=data['mode']
            ),
            seed=int(data['seed']),
            output_path=data['output_path'],
            degenerate_band=bool(data['degenerate_band'])
        )


@dataclass(frozen=True)
class FailureRecord:
    """An input that could not be turned into a proxy; the run went on."""
    index: int
    input_path: str
    error_type: str
    error_message: str

    def to_dict(self) -> Dict[str, Any]:
        """Convert failure to dictionary representation."""
        return {
            'input_path': self.input_path,
            'error_type': self.error_type,
            'error_message': self.error_message
        }


@dataclass
class DatasetManifest:
    """
    Bookkeeping of a generation run.

    Entries are kept in input order; ``len(entries) + len(failures)``
    equals the number of well-lit inputs.
    """
    entries: List[ManifestEntry] = field(default_factory=list)
    failures: List[FailureRecord] = field(default_factory=list)
    manifest_path: Optional[Path] = None

    @property
    def ok_count(self) -> int:
        return len(self.entries)

    @property
    def failed_count(self) -> int:
        return len(self.failures)

    @property
    def exemplar_assignments(self) -> List[str]:
        return [entry.exemplar_path for entry in self.entries]

    def summary_line(self) -> str:
        """Human-readable ``N ok, M failed`` summary."""
        return f"{self.ok_count} ok, {self.failed_count} failed"

    def to_jsonl(self) -> str:
        """All entries as line-delimited JSON, one entry per line."""
        return "".join(entry.to_json() + "\n" for entry in self.entries)

    @classmethod
    def from_jsonl(cls, text: str) -> "DatasetManifest":
        """Parse line-delimited manifest text."""
        entries = [
            ManifestEntry.from_dict(json.loads(line))
            for line in text.splitlines() if line.strip()
        ]
        return cls(entries=entries)


@dataclass(frozen=True)
class SweepCell:
    """Placement of one parameter setting on a contact sheet."""
    index: int
    row: int
    column: int
    params: TranslationParams
    degenerate_band: bool = False

    def to_dict(self) -> Dict[str, Any]:
        """Convert cell to dictionary representation."""
        return {
            'cell': self.index,
            'row': self.row,
            'column': self.column,
            **self.params.to_dict(),
            'degenerate_band': self.degenerate_band
        }


@dataclass(frozen=True)
class SweepResult:
    """Contact sheet of translated cells plus the cell-to-params map."""
    sheet: RasterImage
    cells: List[SweepCell]
    cell_height: int
    cell_width: int

    def to_jsonl(self) -> str:
        return "".join(json.dumps(cell.to_dict()) + "\n" for cell in self.cells)
