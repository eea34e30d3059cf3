"""
Tests for saliency and depth map metrics.
"""

import numpy as np
import pytest

from src.core.entities import GrayMap
from src.domain.metrics import adaptive_threshold, depth_metrics, f_beta, f_measure, mae
from src.shared.exceptions import ArgumentError


def gmap(values, bounded=True):
    return GrayMap(np.asarray(values, dtype=float), bounded=bounded)


class TestMae:
    """Test suite for mae."""

    def test_identical_maps(self):
        """pred = gt gives 0."""
        m = gmap([[0.1, 0.9], [0.5, 0.0]])
        assert mae(m, m) == 0.0

    def test_opposite_maps(self):
        """All ones against all zeros gives 1."""
        assert mae(gmap(np.ones((3, 3))), gmap(np.zeros((3, 3)))) == 1.0

    def test_two_pixel_example(self):
        """[0.2, 0.8] against [0, 1] gives 0.2."""
        assert mae(gmap([[0.2, 0.8]]), gmap([[0.0, 1.0]])) == pytest.approx(0.2, abs=1e-9)

    def test_symmetric(self):
        """MAE does not depend on argument order."""
        rng = np.random.default_rng(0)
        a, b = gmap(rng.random((4, 5))), gmap(rng.random((4, 5)))
        assert mae(a, b) == mae(b, a)

    def test_shape_mismatch(self):
        """Different shapes are an argument error."""
        with pytest.raises(ArgumentError):
            mae(gmap(np.zeros((2, 2))), gmap(np.zeros((2, 3))))


class TestFMeasure:
    """Test suite for f_measure."""

    def test_binary_prediction_equal_to_gt(self):
        """A prediction equal to a binary gt scores 1."""
        gt = gmap([[0, 1, 1], [0, 0, 1]])
        result = f_measure(gt, gt)
        assert result.value == pytest.approx(1.0)
        assert result.precision == 1.0 and result.recall == 1.0

    def test_all_zero_prediction(self):
        """Predicting nothing scores 0."""
        gt = gmap([[0, 1], [1, 0]])
        assert f_measure(gmap(np.zeros((2, 2))), gt).value == 0.0

    def test_formula_example(self):
        """P = 0.5, R = 1, beta^2 = 0.3 gives 0.65 / 1.15."""
        assert f_beta(0.5, 1.0, 0.3) == pytest.approx(1.3 * 0.5 / 1.15, abs=1e-9)
        assert f_beta(0.5, 1.0, 0.3) == pytest.approx(0.5652, abs=1e-4)

    def test_half_precision_prediction(self):
        """Two predicted positives over one true positive give P = 0.5, R = 1."""
        pred = gmap([[1, 1, 0, 0]])
        gt = gmap([[1, 0, 0, 0]])
        result = f_measure(pred, gt)
        assert result.threshold == 1.0
        assert (result.precision, result.recall) == (0.5, 1.0)
        assert result.value == pytest.approx(0.65 / 1.15, abs=1e-9)

    def test_adaptive_threshold(self):
        """Threshold is twice the mean, capped at 1."""
        assert adaptive_threshold(gmap([[0.1, 0.3]])) == pytest.approx(0.4)
        assert adaptive_threshold(gmap([[0.9, 0.8]])) == 1.0

    def test_empty_ground_truth_flagged(self):
        """No positives in gt gives 0 with gt_empty set."""
        result = f_measure(gmap([[0.5, 0.2]]), gmap([[0, 0]]))
        assert result.value == 0.0
        assert result.gt_empty

    def test_removing_a_true_positive_never_raises_recall(self):
        """Flipping a correct positive to negative cannot increase recall."""
        pred = np.array([[1.0, 1.0, 0.0, 1.0, 0.0, 0.0]])
        gt = gmap([[1, 1, 1, 1, 0, 0]])
        before = f_measure(gmap(pred), gt)
        pred[0, 0] = 0.0
        after = f_measure(gmap(pred), gt)
        assert after.recall <= before.recall

    def test_value_in_unit_interval(self):
        """Random predictions score within [0, 1]."""
        rng = np.random.default_rng(7)
        for _ in range(20):
            gt = gmap((rng.random((8, 8)) > 0.6).astype(float))
            score = f_measure(gmap(rng.random((8, 8))), gt).value
            assert 0.0 <= score <= 1.0

    def test_non_binary_ground_truth_rejected(self):
        """Ground truth must be binary."""
        with pytest.raises(ArgumentError):
            f_measure(gmap([[0.5, 0.5]]), gmap([[0.5, 1.0]]))


class TestDepthMetrics:
    """Test suite for depth_metrics."""

    def test_identical_maps(self):
        """pred = gt: all deltas 1, REL and RMSE 0."""
        gt = gmap([[1.0, 2.0], [4.0, 0.5]], bounded=False)
        result = depth_metrics(gt, gt)
        assert (result.delta1, result.delta2, result.delta3) == (1.0, 1.0, 1.0)
        assert result.rel == 0.0 and result.rmse == 0.0

    def test_ratio_exactly_1_25_fails_delta1(self):
        """pred = 1.25 gt: delta1 = 0 under the strict inequality."""
        gt = gmap([[1.0, 2.0], [4.0, 0.5]], bounded=False)
        pred = gmap(gt.values * 1.25, bounded=False)
        result = depth_metrics(pred, gt)
        assert result.delta1 == 0.0
        assert result.delta2 == 1.0 and result.delta3 == 1.0
        assert result.rel == pytest.approx(0.25, abs=1e-9)

    def test_constant_two_against_one(self):
        """gt 1, pred 2: RMSE 1, REL 1, ratio 2 exceeds 1.25^3."""
        result = depth_metrics(gmap(np.full((3, 3), 2.0), bounded=False),
                               gmap(np.ones((3, 3)), bounded=False))
        assert result.rmse == pytest.approx(1.0, abs=1e-9)
        assert result.rel == pytest.approx(1.0, abs=1e-9)
        assert result.delta3 == 0.0

    def test_rel_is_asymmetric(self):
        """Swapping pred and gt changes REL but not RMSE."""
        a = gmap(np.full((2, 2), 2.0), bounded=False)
        b = gmap(np.ones((2, 2)), bounded=False)
        assert depth_metrics(a, b).rel != depth_metrics(b, a).rel
        assert depth_metrics(a, b).rmse == depth_metrics(b, a).rmse

    def test_nonpositive_depth_rejected(self):
        """A zero depth is an argument error."""
        with pytest.raises(ArgumentError):
            depth_metrics(gmap([[0.0, 1.0]]), gmap([[1.0, 1.0]]))
        with pytest.raises(ArgumentError):
            depth_metrics(gmap([[1.0, 1.0]]), gmap([[1.0, -1.0]], bounded=False))

    def test_shape_mismatch(self):
        """Different shapes are an argument error."""
        with pytest.raises(ArgumentError):
            depth_metrics(gmap(np.ones((2, 2))), gmap(np.ones((3, 2))))
