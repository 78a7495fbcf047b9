"""Unit tests for step 1: spectral subtraction."""
import numpy as np
import pytest

from src.dsp.spectral_subtraction import (
    enhance_step1,
    enhance_step1_with_trace,
    recombine_with_noisy_phase,
    subtract_magnitude,
)
from src.errors import InvalidArgumentError, TooShortInputError
from src.models import FrameLayout, NoiseTrackerConfig, Spectrum, SubtractionParams, Waveform
from tests.conftest import band_energy_db, tone, voiced_signal, white_noise


class TestSubtractMagnitude:
    """Test suite for magnitude subtraction with flooring."""

    def test_example(self):
        """Test the subtraction and the floor branch."""
        z = subtract_magnitude(np.array([1.0, 2.0, 3.0]), np.array([0.5, 0.5, 4.0]), 1.0, 0.1)

        assert np.allclose(z, [0.5, 1.5, 0.3])

    def test_zero_difference_takes_floor(self):
        """Test a difference of exactly zero uses the floor."""
        z = subtract_magnitude(np.array([2.0]), np.array([1.0]), 2.0, 0.1)

        assert z[0] == pytest.approx(0.2)

    def test_matches_scalar_loop(self, rng):
        """Test the vectorized form against a bin-by-bin loop."""
        for _ in range(1000):
            noisy = np.abs(rng.standard_normal(16))
            noise = np.abs(rng.standard_normal(16))
            alpha = rng.uniform(0.0, 3.0)
            z = subtract_magnitude(noisy, noise, alpha, 0.1)

            for k in range(16):
                diff = noisy[k] - alpha * noise[k]
                expected = diff if diff > 0 else 0.1 * noisy[k]
                assert z[k] == expected

    def test_length_mismatch(self):
        """Test vectors of different length are rejected."""
        with pytest.raises(InvalidArgumentError, match="length mismatch"):
            subtract_magnitude(np.ones(4), np.ones(5), 1.0, 0.1)


class TestRecombine:
    """Test suite for attaching the noisy phase."""

    def test_unchanged_magnitude_restores_spectrum(self, rng):
        """Test |Y| with the phase of Y gives Y back."""
        layout = FrameLayout(frame_len=8, hop=4, fft_len=8)
        noisy = Spectrum(bins=rng.standard_normal(8) + 1j * rng.standard_normal(8), layout=layout)
        restored = recombine_with_noisy_phase(np.abs(noisy.bins), noisy)

        assert np.allclose(restored.bins, noisy.bins, atol=1e-12)

    def test_zero_bins_get_zero_phase(self):
        """Test bins where Y is zero become real."""
        layout = FrameLayout(frame_len=4, hop=2, fft_len=4)
        noisy = Spectrum(bins=[0, 1j, 0, -1j], layout=layout)
        result = recombine_with_noisy_phase(np.array([2.0, 3.0, 2.0, 3.0]), noisy)

        assert np.allclose(result.bins, [2, 3j, 2, -3j])


class TestEnhanceStep1:
    """Test suite for the step-1 driver."""

    def test_length_preserved(self):
        """Test output length and rate equal the input's."""
        noisy = white_noise(4001, seed=3)
        result = enhance_step1(noisy, SubtractionParams())

        assert len(result) == 4001
        assert result.sample_rate_hz == 8000

    def test_too_short_for_initialization(self):
        """Test inputs shorter than N_s hops plus a frame are rejected."""
        with pytest.raises(TooShortInputError, match="at least 480"):
            enhance_step1(white_noise(479, seed=0), SubtractionParams())

    def test_minimum_length_accepted(self):
        """Test the shortest acceptable input runs."""
        assert len(enhance_step1(white_noise(480, seed=0), SubtractionParams())) == 480

    def test_trace_counts(self):
        """Test the trace covers every frame after initialization."""
        noisy = white_noise(4800, seed=5)
        _, trace = enhance_step1_with_trace(noisy, SubtractionParams())

        assert trace.n_init_frames == 8
        assert len(trace.alphas) == trace.n_frames - 8
        assert len(trace.silence) == len(trace.alphas)
        assert trace.noise_updates == trace.silence_frames

    def test_stationary_noise_is_mostly_silence(self):
        """Test the VAD labels most frames of pure noise as silence."""
        _, trace = enhance_step1_with_trace(white_noise(8000, seed=11), SubtractionParams())

        assert trace.silence_frames > 0.9 * len(trace.silence)

    def test_speech_frames_detected(self):
        """Test voiced frames after a silent lead-in are not silence."""
        clean = voiced_signal()
        noisy = clean.with_samples(clean.samples + white_noise(len(clean), seed=2, scale=0.01).samples)
        _, trace = enhance_step1_with_trace(noisy, SubtractionParams())

        assert not all(trace.silence[-100:])

    def test_noise_energy_reduced(self):
        """Test subtraction lowers the energy of stationary noise in at least 48 of 50 trials."""
        reduced = sum(
            enhance_step1(noisy, SubtractionParams()).power() < noisy.power()
            for noisy in (white_noise(8000, seed=seed) for seed in range(50))
        )

        assert reduced >= 48

    def test_tone_preserved(self):
        """Test a 1 kHz tone over a faint noise floor keeps its band energy within 1 dB."""
        samples = white_noise(12000, seed=6, scale=1e-4).samples.copy()
        samples[2000:] += tone(1000.0, 10000).samples
        noisy = Waveform(samples=samples, sample_rate_hz=8000)

        result = enhance_step1(noisy, SubtractionParams())

        loss_db = (band_energy_db(noisy, 950.0, 1050.0, 4000, 11000)
                   - band_energy_db(result, 950.0, 1050.0, 4000, 11000))
        assert abs(loss_db) < 1.0

    def test_deterministic(self):
        """Test two runs over the same input are bit-identical."""
        clean = voiced_signal()
        noisy = clean.with_samples(clean.samples + white_noise(len(clean), seed=8, scale=0.05).samples)

        first = enhance_step1(noisy, SubtractionParams())
        second = enhance_step1(noisy, SubtractionParams())

        assert np.array_equal(first.samples, second.samples)

    def test_zero_input_stays_zero(self):
        """Test digital silence passes through as zeros."""
        silent = Waveform(samples=np.zeros(2000), sample_rate_hz=8000)

        assert np.all(enhance_step1(silent, SubtractionParams()).samples == 0)

    def test_disabled_subtraction_is_identity(self):
        """Test alpha clamped to 0 reproduces the input."""
        params = SubtractionParams(tracker=NoiseTrackerConfig(alpha_max=0.0))
        noisy = white_noise(3000, seed=9)

        assert np.allclose(enhance_step1(noisy, params).samples, noisy.samples, atol=1e-9)
