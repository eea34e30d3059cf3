"""
Tests for the centered 2-D Fourier analysis and synthesis.
"""

import numpy as np
import pytest

from src.core.entities import ChannelSpectrum, ImageSpectrum, RasterImage
from src.domain.spectrum import amplitude_to_image, dft2, idft2, naive_dft2
from src.shared.exceptions import ArgumentError


def _complex(spec: ImageSpectrum) -> np.ndarray:
    return spec.amplitude * np.exp(1j * spec.phase)


def _random_image(rng: np.random.Generator, h: int, w: int, channels: int = 1) -> RasterImage:
    return RasterImage(rng.random((h, w, channels)))


class TestDft2:
    """Test suite for dft2."""

    def test_constant_image_has_only_dc(self):
        """A constant c gives c*H*W at the center and ~0 elsewhere."""
        c, h, w = 0.37, 6, 9
        amplitude = dft2(RasterImage(np.full((h, w), c))).channels[0].amplitude
        center = (h // 2, w // 2)
        assert amplitude[center] == pytest.approx(c * h * w, abs=1e-9)
        others = amplitude.copy()
        others[center] = 0.0
        assert others.max() <= 1e-9

    def test_zero_image(self):
        """Zeros transform to zero amplitude."""
        assert np.all(dft2(RasterImage(np.zeros((4, 5)))).amplitude == 0.0)

    def test_one_spectrum_per_channel(self, scene):
        """An RGB image yields three channel spectra of its size."""
        spec = dft2(scene)
        assert len(spec.channels) == 3
        assert spec.amplitude.shape == scene.shape
        assert spec.channels[0].center == (scene.height // 2, scene.width // 2)

    def test_phase_range(self):
        """Phases lie in (-pi, pi]."""
        spec = dft2(_random_image(np.random.default_rng(1), 9, 8))
        assert spec.phase.min() > -np.pi
        assert spec.phase.max() <= np.pi

    def test_hermitian_symmetry(self):
        """For odd sizes, amplitude[m, n] equals amplitude[-m, -n]."""
        amplitude = dft2(_random_image(np.random.default_rng(2), 7, 9)).channels[0].amplitude
        assert np.max(np.abs(amplitude - amplitude[::-1, ::-1])) <= 1e-9

    def test_hermitian_symmetry_even_sizes(self):
        """For even sizes the symmetry holds about the DC bin."""
        amplitude = dft2(_random_image(np.random.default_rng(3), 8, 10)).channels[0].amplitude
        cm, cn = 4, 5
        for m in range(-3, 4):
            for n in range(-4, 5):
                assert amplitude[cm + m, cn + n] == pytest.approx(amplitude[cm - m, cn - n], abs=1e-9)


class TestNaiveDft2:
    """Test suite for the direct DFT used as an oracle."""

    @pytest.mark.parametrize("shape", [(7, 5), (8, 8), (16, 16), (15, 16)])
    def test_agrees_with_fft(self, shape):
        """dft2 matches the double-sum definition within 1e-8 per bin."""
        rng = np.random.default_rng(sum(shape))
        for _ in range(50):
            img = _random_image(rng, *shape)
            fast, slow = dft2(img), naive_dft2(img)
            assert np.max(np.abs(fast.amplitude - slow.amplitude)) <= 1e-8
            assert np.max(np.abs(_complex(fast) - _complex(slow))) <= 1e-8

    def test_one_by_one_agrees_exactly(self):
        """On 1x1 images both transforms give the pixel itself."""
        img = RasterImage(np.array([[[0.625]]]))
        assert naive_dft2(img).amplitude[0, 0, 0] == dft2(img).amplitude[0, 0, 0] == 0.625

    def test_impulse_has_flat_spectrum(self):
        """An impulse at (0, 0) of 8x8 has amplitude 1 everywhere."""
        data = np.zeros((8, 8))
        data[0, 0] = 1.0
        amplitude = naive_dft2(RasterImage(data)).amplitude
        assert np.max(np.abs(amplitude - 1.0)) <= 1e-12

    def test_parseval(self):
        """Sum of squares equals the amplitude energy over H*W."""
        rng = np.random.default_rng(12)
        for _ in range(50):
            img = _random_image(rng, 12, 12)
            energy = float(np.sum(img.data ** 2))
            spectral = float(np.sum(naive_dft2(img).amplitude ** 2)) / (12 * 12)
            assert abs(energy - spectral) / energy <= 1e-8

    def test_size_guard(self):
        """More than 4096 pixels is refused."""
        with pytest.raises(ArgumentError):
            naive_dft2(RasterImage(np.zeros((65, 64))))
        naive_dft2(RasterImage(np.zeros((64, 64))))


class TestIdft2:
    """Test suite for idft2."""

    def test_round_trip(self, scene):
        """idft2(dft2(x)) reproduces x within 1e-9."""
        field = idft2(dft2(scene))
        assert np.max(np.abs(field.data - scene.data)) <= 1e-9
        assert field.imaginary_residual <= 1e-9

    def test_round_trip_random_odd_sizes(self):
        """The round trip holds for odd and mixed sizes."""
        rng = np.random.default_rng(4)
        for shape in [(7, 5), (15, 16), (1, 9)]:
            img = _random_image(rng, *shape, channels=3)
            assert np.max(np.abs(idft2(dft2(img)).data - img.data)) <= 1e-9

    def test_zero_spectrum(self):
        """A zero spectrum inverts to a zero field."""
        zeros = np.zeros((4, 6))
        field = idft2(ImageSpectrum([ChannelSpectrum(amplitude=zeros, phase=zeros)]))
        assert np.all(field.data == 0.0)
        assert field.imaginary_residual == 0.0

    def test_unchanged_fused_spectrum_reconstructs_input(self, scene):
        """Well-lit amplitude with well-lit phase gives the well-lit image back."""
        spec = dft2(scene)
        rebuilt = ImageSpectrum([
            ChannelSpectrum(amplitude=c.amplitude.copy(), phase=c.phase) for c in spec.channels
        ])
        assert np.max(np.abs(idft2(rebuilt).data - scene.data)) <= 1e-9


class TestAmplitudeToImage:
    """Test suite for the spectrum debug view."""

    def test_log_scaled_and_normalised(self, scene):
        """The view is one channel with its maximum at 1, at the DC bin."""
        channel = dft2(scene).channels[0]
        view = amplitude_to_image(channel)
        assert view.shape == (scene.height, scene.width, 1)
        assert view.data.max() == pytest.approx(1.0)
        assert np.unravel_index(np.argmax(view.data[:, :, 0]), view.data.shape[:2]) == channel.center

    def test_zero_amplitude_is_black(self):
        """All-zero amplitude maps to a black image."""
        zeros = np.zeros((3, 3))
        assert np.all(amplitude_to_image(ChannelSpectrum(zeros, zeros)).data == 0.0)
