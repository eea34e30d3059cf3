"""
Data models for map evaluation.
"""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional


@dataclass(frozen=True)
class FMeasureResult:
    """
    Weighted F-measure of one binarized prediction.

    ``gt_empty`` flags a ground truth with no positives; recall is
    undefined there and ``value`` is reported as 0.
    """
    value: float
    precision: float
    recall: float
    threshold: float
    beta_sq: float
    gt_empty: bool = False

    def __float__(self) -> float:
        return self.value

    def to_dict(self) -> Dict[str, Any]:
        return {
            'f_measure': self.value,
            'precision': self.precision,
            'recall': self.recall,
            'threshold': self.threshold,
            'beta_sq': self.beta_sq,
            'gt_empty': self.gt_empty
        }


@dataclass(frozen=True)
class DepthMetrics:
    """Threshold accuracies, mean relative error and RMSE of a depth map."""
    delta1: float
    delta2: float
    delta3: float
    rel: float
    rmse: float

    def to_dict(self) -> Dict[str, float]:
        return {
            'delta1': self.delta1,
            'delta2': self.delta2,
            'delta3': self.delta3,
            'rel': self.rel,
            'rmse': self.rmse
        }


@dataclass
class EvaluationReport:
    """
    Line records of an evaluation run.

    ``records`` holds ``{"pair_id", "metric", "value"}`` rows and
    ``skipped`` holds ``{"pair_id", "status", "reason"}`` rows.
    """
    task: str
    records: List[Dict[str, Any]] = field(default_factory=list)
    skipped: List[Dict[str, Any]] = field(default_factory=list)
    summary: Dict[str, float] = field(default_factory=dict)
    report_path: Optional[str] = None

    @property
    def pair_ids(self) -> List[str]:
        seen: Dict[str, None] = {}
        for record in self.records:
            seen.setdefault(record['pair_id'], None)
        return list(seen)

    def values_for(self, metric: str) -> Dict[str, float]:
        """Metric value per pair id."""
        return {r['pair_id']: r['value'] for r in self.records if r['metric'] == metric}
