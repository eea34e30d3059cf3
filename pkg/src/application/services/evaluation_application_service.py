"""
Application service for map evaluation.

Prediction and ground-truth files are matched by stem; each matched
pair yields one record per metric, anything else a skip record.
The report is tabulated with pandas.
"""

import logging
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple

import pandas as pd

from ...core.entities import EvaluationReport, GrayMap
from ...core.interfaces import EvaluationServiceInterface
from ...domain.metrics import DEFAULT_BETA_SQ, depth_metrics, f_measure, mae
from ...infrastructure.io import ImageRepository, write_json
from ...shared.exceptions import ArgumentError, ImageIOError, ProxyLightError

logger = logging.getLogger(__name__)

TASKS = ("saliency", "depth")
GT_BINARY_THRESHOLD = 0.5


def summary_path(report_path: str) -> Path:
    """``<report>.summary.json`` next to the report."""
    target = Path(report_path)
    return target.with_name(target.name + ".summary.json")


class EvaluationApplicationService(EvaluationServiceInterface):
    """
    Application service for evaluation operations.

    Scores saliency pairs with MAE and F-measure, depth pairs with
    the threshold accuracies, REL and RMSE.
    """

    def __init__(self, repository: Optional[ImageRepository] = None,
                 beta_sq: float = DEFAULT_BETA_SQ):
        """
        Initialize the service.

        Args:
            repository: Image file access (a default one when omitted)
            beta_sq: Precision weight of the F-measure
        """
        self.repository = repository or ImageRepository()
        self.beta_sq = beta_sq

    def _score_saliency(self, pred_path: str, gt_path: str) -> Dict[str, float]:
        pred = self.repository.load_gray_map(pred_path)
        gt = self.repository.load_gray_map(gt_path)
        gt_binary = GrayMap((gt.values >= GT_BINARY_THRESHOLD).astype(float))
        return {
            'mae': mae(pred, gt),
            'f_measure': f_measure(pred, gt_binary, self.beta_sq).value
        }

    def _score_depth(self, pred_path: str, gt_path: str) -> Dict[str, float]:
        pred = self.repository.load_gray_map(pred_path, bounded=False)
        gt = self.repository.load_gray_map(gt_path, bounded=False)
        return depth_metrics(pred, gt).to_dict()

    def evaluate(
        self,
        pred_files: List[str],
        gt_files: List[str],
        task: str = "saliency"
    ) -> EvaluationReport:
        """
        Score every prediction that has a ground truth with the same stem.

        Args:
            pred_files: Prediction maps
            gt_files: Ground-truth maps
            task: ``saliency`` or ``depth``

        Returns:
            EvaluationReport: Records, skips and per-metric means

        Raises:
            ArgumentError: If the task is unknown
        """
        if task not in TASKS:
            raise ArgumentError(f"Unknown task '{task}' (choose from {', '.join(TASKS)})")
        score = self._score_saliency if task == "saliency" else self._score_depth

        preds, pred_dupes = self._index_by_stem(pred_files)
        gts, gt_dupes = self._index_by_stem(gt_files)

        report = EvaluationReport(task=task)
        for role, kept, dupes in (("prediction", preds, pred_dupes), ("ground truth", gts, gt_dupes)):
            for pair_id, path in dupes:
                self._skip(report, pair_id,
                           f"duplicate {role} stem: {Path(path).name} ignored, {Path(kept[pair_id]).name} used")
        for pair_id in sorted(set(preds) | set(gts)):
            if pair_id not in gts or pair_id not in preds:
                reason = "no ground truth" if pair_id not in gts else "no prediction"
                self._skip(report, pair_id, reason)
                continue
            try:
                values = score(preds[pair_id], gts[pair_id])
            except (ProxyLightError, OSError) as e:
                self._skip(report, pair_id, f"{e.__class__.__name__}: {e}")
                continue
            report.records.extend(
                {'pair_id': pair_id, 'metric': metric, 'value': float(value)}
                for metric, value in values.items()
            )

        report.summary = self.summarize(report.records)
        logger.info("Evaluation finished", extra={
            'task': task, 'pairs': len(report.pair_ids), 'skipped': len(report.skipped)
        })
        return report

    @staticmethod
    def _index_by_stem(files: List[str]) -> Tuple[Dict[str, str], List[Tuple[str, str]]]:
        # The first file name in sort order owns its stem
        by_stem: Dict[str, str] = {}
        duplicates: List[Tuple[str, str]] = []
        for path in sorted(files, key=lambda p: Path(p).name):
            stem = Path(path).stem
            if stem in by_stem:
                duplicates.append((stem, path))
            else:
                by_stem[stem] = path
        return by_stem, duplicates

    @staticmethod
    def _skip(report: EvaluationReport, pair_id: str, reason: str) -> None:
        logger.warning("Skipping evaluation pair", extra={'pair_id': pair_id, 'reason': reason})
        report.skipped.append({'pair_id': pair_id, 'status': 'skipped', 'reason': reason})

    @staticmethod
    def summarize(records: List[Dict[str, Any]]) -> Dict[str, float]:
        """Mean value per metric."""
        if not records:
            return {}
        frame = pd.DataFrame.from_records(records)
        return {metric: float(v) for metric, v in frame.groupby('metric')['value'].mean().items()}

    @staticmethod
    def write_report(report: EvaluationReport, report_path: str) -> str:
        """
        Write the records and skips as JSON lines plus a summary file.

        Returns:
            str: Path of the summary file
        """
        chunks = []
        for rows, columns in ((report.records, ['pair_id', 'metric', 'value']),
                              (report.skipped, ['pair_id', 'status', 'reason'])):
            if rows:
                text = pd.DataFrame.from_records(rows, columns=columns).to_json(
                    orient='records', lines=True)
                chunks.append(text if text.endswith("\n") else text + "\n")

        target = Path(report_path)
        try:
            target.parent.mkdir(parents=True, exist_ok=True)
            target.write_text("".join(chunks), encoding="utf-8")
        except OSError as e:
            raise ImageIOError(f"Cannot write report ({e.strerror or e})", path=str(target)) from e

        report.report_path = str(target)
        return write_json(summary_path(report_path), {'task': report.task, 'metrics': report.summary})
