"""
Scores for predicted maps against ground truth.

Saliency maps are scored with MAE and an adaptive-threshold F-measure,
depth maps with threshold accuracies, mean relative error and RMSE.
"""

import numpy as np

from ...core.entities import DepthMetrics, FMeasureResult, GrayMap
from ...shared.exceptions import ArgumentError

DEFAULT_BETA_SQ = 0.3
DELTA_BASE = 1.25


def _require_same_shape(pred: GrayMap, gt: GrayMap) -> None:
    if pred.shape != gt.shape:
        raise ArgumentError(f"prediction shape {pred.shape} does not match ground truth {gt.shape}")


def mae(pred: GrayMap, gt: GrayMap) -> float:
    """Mean absolute difference over all pixels."""
    _require_same_shape(pred, gt)
    return float(np.mean(np.abs(pred.values - gt.values)))


def adaptive_threshold(pred: GrayMap) -> float:
    """Twice the mean prediction, capped at 1."""
    return min(2.0 * float(pred.values.mean()), 1.0)


def f_beta(precision: float, recall: float, beta_sq: float = DEFAULT_BETA_SQ) -> float:
    """(1 + b2) P R / (b2 P + R), or 0 when the denominator vanishes."""
    denominator = beta_sq * precision + recall
    if denominator <= 0.0:
        return 0.0
    return (1.0 + beta_sq) * precision * recall / denominator


def f_measure(pred: GrayMap, gt_binary: GrayMap, beta_sq: float = DEFAULT_BETA_SQ) -> FMeasureResult:
    """
    F-measure of a prediction binarized at its adaptive threshold.

    A pixel is predicted positive when it reaches the threshold and is
    nonzero, so an all-zero prediction has no positives.

    Args:
        pred: Predicted saliency in [0, 1]
        gt_binary: Ground truth with values in {0, 1}
        beta_sq: Precision weight

    Returns:
        FMeasureResult: Score plus precision, recall and threshold;
        ``gt_empty`` is set (and the score is 0) when the ground truth
        has no positives

    Raises:
        ArgumentError: On shape mismatch, non-binary ground truth or
            negative ``beta_sq``
    """
    _require_same_shape(pred, gt_binary)
    if beta_sq < 0:
        raise ArgumentError(f"beta_sq must be >= 0, got {beta_sq}")
    if not np.all((gt_binary.values == 0.0) | (gt_binary.values == 1.0)):
        raise ArgumentError("ground truth for the F-measure must be binary")

    threshold = adaptive_threshold(pred)
    predicted = (pred.values >= threshold) & (pred.values > 0.0)
    actual = gt_binary.values == 1.0

    true_positive = int(np.count_nonzero(predicted & actual))
    predicted_count = int(np.count_nonzero(predicted))
    actual_count = int(np.count_nonzero(actual))

    precision = true_positive / predicted_count if predicted_count else 0.0
    if actual_count == 0:
        return FMeasureResult(value=0.0, precision=precision, recall=0.0,
                              threshold=threshold, beta_sq=beta_sq, gt_empty=True)
    recall = true_positive / actual_count
    return FMeasureResult(value=f_beta(precision, recall, beta_sq), precision=precision,
                          recall=recall, threshold=threshold, beta_sq=beta_sq)


def depth_metrics(pred: GrayMap, gt: GrayMap) -> DepthMetrics:
    """
    Standard monocular depth scores.

    delta_k is the fraction of pixels with max(p / g, g / p) < 1.25^k
    (strict), REL is mean(|p - g| / g) and RMSE is sqrt(mean((p - g)^2)).

    Raises:
        ArgumentError: On shape mismatch or any nonpositive depth
    """
    _require_same_shape(pred, gt)
    p, g = pred.values, gt.values
    if np.any(p <= 0.0) or np.any(g <= 0.0):
        raise ArgumentError("depth values must be strictly positive")

    ratio = np.maximum(p / g, g / p)
    deltas = [float(np.mean(ratio < DELTA_BASE ** k)) for k in (1, 2, 3)]
    rel = float(np.mean(np.abs(p - g) / g))
    rmse = float(np.sqrt(np.mean((p - g) ** 2)))
    return DepthMetrics(delta1=deltas[0], delta2=deltas[1], delta3=deltas[2], rel=rel, rmse=rmse)
