"""
Tests for the band-pass fusion mask, amplitude fusion and translation.
"""

import logging

import numpy as np
import pytest

from src.core.entities import (
    FusionMask,
    RasterImage,
    TranslationMode,
    TranslationParams
)
from src.domain.fusion import (
    DEGENERATE_BAND_WARNING,
    ablation_grid,
    build_mask,
    centered_indices,
    fuse_amplitude,
    gamma_series,
    mask_cache_info,
    ringing_energy,
    translate
)
from src.domain.imaging import synth_step_image
from src.domain.spectrum import dft2
from src.shared.exceptions import ArgumentError


def _regions(h, w, lambda_l, lambda_u):
    rows, cols = centered_indices(h), centered_indices(w)
    upper = np.logical_and.outer(np.abs(rows) <= lambda_u * h / 2, np.abs(cols) <= lambda_u * w / 2)
    if lambda_l == 0:
        lower = np.zeros((h, w), dtype=bool)
    else:
        lower = np.logical_and.outer(np.abs(rows) <= lambda_l * h / 2, np.abs(cols) <= lambda_l * w / 2)
    return upper, lower


class TestTranslationParams:
    """Test suite for parameter validation."""

    def test_defaults(self):
        """Defaults are lambda_l=0.01, lambda_u=0.10, gamma=3.5, mode ours."""
        params = TranslationParams()
        assert (params.lambda_l, params.lambda_u, params.gamma) == (0.01, 0.10, 3.5)
        assert params.mode is TranslationMode.OURS
        assert params.validate().is_valid

    @pytest.mark.parametrize("kwargs", [
        {'lambda_l': 0.2, 'lambda_u': 0.1},
        {'lambda_l': -0.01},
        {'lambda_u': 1.0},
        {'gamma': 0.5},
        {'gamma': float('nan')},
    ])
    def test_invalid_values_rejected(self, kwargs):
        """Each constraint violation raises ArgumentError."""
        with pytest.raises(ArgumentError):
            TranslationParams(**kwargs).ensure_valid()

    def test_all_violations_reported(self):
        """ensure_valid lists every violated constraint at once."""
        result = TranslationParams(lambda_l=0.5, lambda_u=0.2, gamma=0.1).validate()
        assert not result.is_valid
        assert len(result.errors) >= 2

    def test_mode_aliases(self):
        """rect and lowpass name the ablation modes."""
        assert TranslationParams(mode="rect").mode is TranslationMode.ABLATION_RECT
        assert TranslationParams(mode="lowpass").mode is TranslationMode.ABLATION_LOWPASS
        with pytest.raises(ArgumentError):
            TranslationParams(mode="hann")


class TestBuildMask:
    """Test suite for build_mask."""

    # ------------------------------------------------------------------ #
    # support and shape of the weights
    # ------------------------------------------------------------------ #

    def test_support_on_480x640(self):
        """Zero outside R_u and inside R_l, positive inside the band."""
        h, w = 480, 640
        mask = build_mask(h, w, TranslationParams(lambda_l=0.01, lambda_u=0.1))
        upper, lower = _regions(h, w, 0.01, 0.1)
        assert np.all(mask.alpha[~upper] == 0.0)
        assert np.all(mask.alpha[lower] == 0.0)
        assert mask.alpha[h // 2, w // 2 + 5] > 0.0
        assert mask.alpha[h // 2 + 4, w // 2] > 0.0
        assert mask.alpha.min() >= 0.0 and mask.alpha.max() <= 1.0
        assert not mask.degenerate_band

    def test_boundary_tapers_to_zero(self):
        """At |m| = lambda_u*H/2 the weight vanishes."""
        h, w = 480, 640
        alpha = build_mask(h, w, TranslationParams()).alpha
        cm, cn = h // 2, w // 2
        for index in [(cm + 24, cn), (cm - 24, cn), (cm, cn + 32), (cm, cn - 32)]:
            assert alpha[index] <= 1e-12

    def test_symmetric_under_negation(self):
        """alpha[m, n] equals alpha[-m, -n] inside the even-sized region."""
        h, w = 480, 640
        alpha = build_mask(h, w, TranslationParams()).alpha
        cm, cn = h // 2, w // 2
        block = alpha[cm - 24:cm + 25, cn - 32:cn + 33]
        assert np.max(np.abs(block - block[::-1, ::-1])) <= 1e-12

    def test_peak_at_dc_for_lowpass(self):
        """With lambda_l = 0 the DC weight is (0.42 + 0.5 + 0.08)^2 = 1."""
        alpha = build_mask(200, 200, TranslationParams(lambda_l=0.0, lambda_u=0.1)).alpha
        assert alpha[100, 100] == pytest.approx(1.0, abs=1e-12)

    def test_lowpass_mode_ignores_lambda_l(self):
        """ablation_lowpass treats lambda_l as 0."""
        params = TranslationParams(lambda_l=0.01, lambda_u=0.1, mode="lowpass")
        alpha = build_mask(200, 200, params).alpha
        assert alpha[100, 100] == pytest.approx(1.0, abs=1e-12)

    def test_rect_mode_is_flat_on_band(self):
        """ablation_rect has weight 1 on R_u minus R_l and 0 elsewhere."""
        h, w = 120, 100
        alpha = build_mask(h, w, TranslationParams(lambda_l=0.05, lambda_u=0.2, mode="rect")).alpha
        upper, lower = _regions(h, w, 0.05, 0.2)
        band = upper & ~lower
        assert np.all(alpha[band] == 1.0)
        assert np.all(alpha[~band] == 0.0)

    def test_fda_mode_swaps_whole_block(self):
        """fda has weight 1 on all of R_u, DC included."""
        h, w = 64, 48
        alpha = build_mask(h, w, TranslationParams(lambda_l=0.05, lambda_u=0.25, mode="fda")).alpha
        upper, _ = _regions(h, w, 0.0, 0.25)
        assert np.all(alpha[upper] == 1.0)
        assert np.all(alpha[~upper] == 0.0)

    # ------------------------------------------------------------------ #
    # degenerate band
    # ------------------------------------------------------------------ #

    def test_small_image_is_degenerate(self, caplog):
        """8x8 with the defaults has an empty band and logs a warning."""
        with caplog.at_level(logging.WARNING):
            mask = build_mask(8, 8, TranslationParams())
        assert mask.degenerate_band
        assert np.all(mask.alpha == 0.0)
        assert mask.support_size == 0
        assert any("Degenerate" in r.getMessage() for r in caplog.records)

    def test_tiny_lowpass_is_not_degenerate(self):
        """A low-pass mask keeping only DC still has a positive weight."""
        mask = build_mask(8, 8, TranslationParams(lambda_l=0.0, lambda_u=0.1))
        assert not mask.degenerate_band
        assert mask.support_size == 1

    # ------------------------------------------------------------------ #
    # caching
    # ------------------------------------------------------------------ #

    def test_cached_and_read_only(self):
        """Equal requests share one read-only array."""
        first = build_mask(64, 64, TranslationParams())
        second = build_mask(64, 64, TranslationParams())
        assert first.alpha is second.alpha
        assert not first.alpha.flags.writeable
        assert mask_cache_info()[0] >= 1

    def test_invalid_params_rejected(self):
        """Mask construction validates its parameters."""
        with pytest.raises(ArgumentError):
            build_mask(64, 64, TranslationParams(lambda_l=0.3, lambda_u=0.2))


class TestFuseAmplitude:
    """Test suite for fuse_amplitude."""

    @pytest.fixture
    def planes(self):
        rng = np.random.default_rng(5)
        return rng.random((6, 6)) * 10, rng.random((6, 6)) * 10

    def _mask(self, value):
        alpha = np.full((6, 6), float(value))
        return FusionMask(alpha=alpha, params=TranslationParams())

    def test_zero_mask_keeps_well(self, planes):
        """alpha = 0 returns a_well exactly."""
        a_well, a_low = planes
        assert np.array_equal(fuse_amplitude(a_well, a_low, self._mask(0)), a_well)

    def test_unit_mask_takes_low(self, planes):
        """alpha = 1 returns a_low exactly."""
        a_well, a_low = planes
        assert np.array_equal(fuse_amplitude(a_well, a_low, self._mask(1)), a_low)

    def test_equal_inputs_unchanged(self, planes):
        """Blending a plane with itself returns it."""
        a_well, _ = planes
        rng = np.random.default_rng(6)
        mask = FusionMask(alpha=rng.random((6, 6)), params=TranslationParams())
        assert np.allclose(fuse_amplitude(a_well, a_well, mask), a_well, atol=1e-12)

    def test_channel_stack_broadcasts(self, planes):
        """(H, W, C) planes share the (H, W) mask."""
        a_well, a_low = planes
        stacked = fuse_amplitude(np.dstack([a_well] * 3), np.dstack([a_low] * 3), self._mask(0.25))
        assert stacked.shape == (6, 6, 3)
        assert np.allclose(stacked[:, :, 2], 0.25 * a_low + 0.75 * a_well)

    def test_shape_mismatch_rejected(self, planes):
        """Differently sized planes are an argument error."""
        a_well, _ = planes
        with pytest.raises(ArgumentError):
            fuse_amplitude(a_well, np.zeros((5, 6)), self._mask(0))
        with pytest.raises(ArgumentError):
            fuse_amplitude(np.zeros((5, 5)), np.zeros((5, 5)), self._mask(0))


class TestTranslate:
    """Test suite for translate."""

    # ------------------------------------------------------------------ #
    # identity family
    # ------------------------------------------------------------------ #

    def test_self_translation_is_identity(self, scene_factory):
        """translate(x, x, gamma=1) reproduces x on natural scenes."""
        for seed in range(5):
            x = scene_factory(seed)
            out = translate(x, x, TranslationParams(gamma=1.0)).image
            assert np.max(np.abs(out.data - x.data)) <= 1e-6

    def test_self_translation_random_images(self):
        """The identity also holds for random images."""
        rng = np.random.default_rng(8)
        for _ in range(20):
            x = RasterImage(rng.random((32, 40, 3)))
            out = translate(x, x, TranslationParams(gamma=1.0)).image
            assert np.max(np.abs(out.data - x.data)) <= 1e-6

    def test_empty_band_is_identity(self, scene_factory, dark_factory):
        """A degenerate band with gamma=1 leaves the image unchanged."""
        x = scene_factory(1, 8, 8)
        result = translate(x, dark_factory(1, 8, 8), TranslationParams(gamma=1.0))
        assert result.degenerate_band
        assert result.warnings == [DEGENERATE_BAND_WARNING]
        assert np.max(np.abs(result.image.data - x.data)) <= 1e-6

    def test_constant_with_itself_is_pure_gamma(self):
        """Constant 0.5 translated with itself at gamma 3.5 is 0.5**3.5."""
        x = RasterImage(np.full((16, 16, 3), 0.5))
        out = translate(x, x, TranslationParams(gamma=3.5)).image
        assert np.max(np.abs(out.data - 0.5 ** 3.5)) <= 1e-9

    # ------------------------------------------------------------------ #
    # darkening
    # ------------------------------------------------------------------ #

    def test_higher_gamma_is_darker(self, scene, dark_exemplar):
        """Mean intensity at gamma 6 is below that at gamma 3.5."""
        at_35 = translate(scene, dark_exemplar, TranslationParams(gamma=3.5)).image
        at_6 = translate(scene, dark_exemplar, TranslationParams(gamma=6.0)).image
        assert at_6.mean() < at_35.mean()
        assert np.all(at_6.data <= at_35.data)

    def test_gamma_series_strictly_decreasing(self, scene_factory, dark_exemplar):
        """Mean output falls strictly across gamma 1, 2.5, 3.5, 6."""
        for seed in range(10):
            means = gamma_series(scene_factory(seed), dark_exemplar, [1.0, 2.5, 3.5, 6.0])
            assert all(a > b for a, b in zip(means, means[1:]))

    def test_gamma_series_matches_translate(self, scene, dark_exemplar):
        """gamma_series agrees with individual translations."""
        means = gamma_series(scene, dark_exemplar, [2.5])
        direct = translate(scene, dark_exemplar, TranslationParams(gamma=2.5)).image.mean()
        assert means[0] == pytest.approx(direct, abs=1e-12)

    def test_dark_exemplar_darkens_batch(self, scene_factory, dark_factory):
        """Every proxy of a 20-image batch is darker than its source."""
        for seed in range(20):
            exemplar = dark_factory(seed)
            assert exemplar.mean() < 0.1
            x = scene_factory(200 + seed)
            assert translate(x, exemplar).image.mean() < x.mean()

    # ------------------------------------------------------------------ #
    # structure
    # ------------------------------------------------------------------ #

    def test_phase_is_the_well_lit_phase(self, scene, dark_exemplar):
        """Reconstruction uses the well-lit phase unchanged."""
        result = translate(scene, dark_exemplar)
        assert np.array_equal(result.spectrum.phase, dft2(scene).phase)

    def test_deterministic(self, scene, dark_exemplar):
        """Identical inputs give bit-identical outputs."""
        first = translate(scene, dark_exemplar).image.data
        second = translate(scene, dark_exemplar).image.data
        assert np.array_equal(first, second)

    def test_exemplar_resized_and_channels_matched(self, scene, dark_factory):
        """A gray exemplar of another size is resized and replicated."""
        gray_small = dark_factory(3, 20, 30, channels=1)
        result = translate(scene, gray_small)
        assert result.image.shape == scene.shape

    def test_rgb_exemplar_for_gray_scene(self, scene_factory, dark_exemplar):
        """An RGB exemplar is averaged for a gray scene."""
        gray = scene_factory(4, channels=1)
        assert translate(gray, dark_exemplar).image.shape == gray.shape

    def test_fda_mode_changes_low_frequencies(self, scene, dark_exemplar):
        """The FDA baseline swaps the DC and so changes the mean before gamma."""
        fda = translate(scene, dark_exemplar, TranslationParams(gamma=1.0, mode="fda")).image
        ours = translate(scene, dark_exemplar, TranslationParams(gamma=1.0)).image
        assert fda.mean() < ours.mean()
        assert ours.mean() == pytest.approx(scene.mean(), abs=0.02)

    def test_output_in_unit_range(self, scene, dark_exemplar):
        """Every mode yields a valid image."""
        for mode in TranslationMode:
            out = translate(scene, dark_exemplar, TranslationParams(mode=mode)).image
            assert out.data.min() >= 0.0 and out.data.max() <= 1.0


class TestRingingEnergy:
    """Test suite for ringing_energy."""

    def test_reference_has_no_ringing(self):
        """The step itself scores 0."""
        step = synth_step_image(32, 32, 16, 0.3, 0.7)
        assert ringing_energy(step, step) == 0.0

    def test_darkened_reference_has_no_ringing(self):
        """A gamma-darkened step measured against itself scores 0."""
        step = RasterImage(synth_step_image(32, 32, 16, 0.3, 0.7).data ** 3.5)
        assert ringing_energy(step, step) == 0.0

    def test_overshoot_is_counted(self):
        """Values outside the plateau levels add their squared excursion."""
        step = synth_step_image(2, 2, 1, 0.3, 0.7)
        img = RasterImage(np.array([[0.3, 0.8], [0.1, 0.7]]))
        expected = (0.1 ** 2 + 0.2 ** 2) / 4
        assert ringing_energy(img, step) == pytest.approx(expected, abs=1e-12)

    def test_dip_inside_plateau_is_counted(self):
        """A dip in the bright plateau counts even above the dark level."""
        step = synth_step_image(2, 2, 1, 0.3, 0.7)
        img = RasterImage(np.array([[0.3, 0.5], [0.3, 0.7]]))
        assert ringing_energy(img, step) == pytest.approx(0.2 ** 2 / 4, abs=1e-12)

    def test_full_range_step_scores_ripples(self):
        """On a 0/1 step, ripples inside the plateaus are still measured."""
        step = synth_step_image(4, 4, 2, 0.0, 1.0)
        data = step.data.copy()
        data[0, 0, 0] = 0.1
        data[3, 3, 0] = 0.8
        expected = (0.1 ** 2 + 0.2 ** 2) / 16
        assert ringing_energy(RasterImage(data), step) == pytest.approx(expected, abs=1e-12)

    def test_near_equal_levels_share_a_region(self):
        """Values within the tolerance form one region bounded by their extrema."""
        step = RasterImage(np.array([[0.5, 0.5 + 1e-4], [0.5, 0.5]]))
        img = RasterImage(np.array([[0.5, 0.5], [0.5 + 1e-4, 0.5]]))
        assert ringing_energy(img, step) == 0.0

    def test_non_positive_tolerance_rejected(self):
        """The region tolerance must be positive."""
        step = synth_step_image(4, 4, 2, 0, 1)
        with pytest.raises(ArgumentError):
            ringing_energy(step, step, region_tolerance=0.0)

    def test_shape_mismatch_rejected(self):
        """Image and reference must have the same shape."""
        with pytest.raises(ArgumentError):
            ringing_energy(synth_step_image(4, 4, 2, 0, 1), synth_step_image(4, 5, 2, 0, 1))

    def test_window_suppresses_ringing(self, dark_factory):
        """A rectangular band rings more than the windowed band on a step edge."""
        step = synth_step_image(256, 256, 128, 0.3, 0.7)
        wins = 0
        for seed in range(10):
            exemplar = dark_factory(seed, 256, 256, channels=1)
            rect = translate(step, exemplar, TranslationParams(gamma=1.0, mode="rect")).image
            ours = translate(step, exemplar, TranslationParams(gamma=1.0)).image
            wins += ringing_energy(rect, step) > ringing_energy(ours, step)
        assert wins >= 9

    def test_window_suppresses_ringing_on_full_range_step(self, dark_factory):
        """Same ordering on a black/white step."""
        step = synth_step_image(256, 256, 128, 0.0, 1.0)
        wins = 0
        for seed in range(10):
            exemplar = dark_factory(seed, 256, 256, channels=1)
            rect = translate(step, exemplar, TranslationParams(gamma=1.0, mode="rect")).image
            ours = translate(step, exemplar, TranslationParams(gamma=1.0)).image
            wins += ringing_energy(rect, step) > ringing_energy(ours, step)
        assert wins >= 9


class TestAblationGrid:
    """Test suite for the ablation preset."""

    def test_four_cells_at_gamma_2_5(self):
        """Rect low-pass, windowed low-pass, band-pass, wide band-pass."""
        grid = ablation_grid()
        assert [(p.lambda_l, p.lambda_u, p.mode.short_name) for p in grid] == [
            (0.0, 0.1, "rect"), (0.0, 0.1, "ours"), (0.01, 0.1, "ours"), (0.01, 0.5, "ours")
        ]
        assert all(p.gamma == 2.5 for p in grid)
        assert all(p.validate().is_valid for p in grid)
