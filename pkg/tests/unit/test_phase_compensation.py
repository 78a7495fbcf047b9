"""Unit tests for step 2: SNR-dependent phase spectrum compensation."""
import math

import numpy as np
import pytest

from src.dsp.phase_compensation import (
    apply_phase_offset,
    build_compensation,
    compensate_spectrum,
    enhance_step2,
    lambda_weights,
    psi_per_bin,
    rms_magnitude,
)
from src.dsp.signal_core import forward_spectrum, inverse_frame
from src.errors import InvalidArgumentError
from src.models import FrameLayout, NuScope, PhaseParams, PsiMode, Spectrum, Waveform, WindowKind
from tests.conftest import band_energy_db, tone, white_noise


PI3 = math.pi ** 3


class TestLambdaWeights:
    """Test suite for the anti-symmetric weighting."""

    def test_small_example(self):
        """Test N = 4 gives [0, 1, 0, -1]."""
        assert np.array_equal(lambda_weights(4), [0, 1, 0, -1])

    def test_n8(self):
        """Test N = 8 layout."""
        assert np.array_equal(lambda_weights(8), [0, 1, 1, 1, 0, -1, -1, -1])

    @pytest.mark.parametrize("fft_len", [2, 5, 255])
    def test_invalid_lengths(self, fft_len):
        """Test odd or too-small lengths are rejected."""
        with pytest.raises(InvalidArgumentError, match="even and >= 4"):
            lambda_weights(fft_len)


class TestRmsMagnitude:
    """Test suite for the noise-power proxy."""

    def test_constant_magnitude(self):
        """Test bins of constant magnitude."""
        layout = FrameLayout(frame_len=4, hop=2, fft_len=4)
        spectrum = Spectrum(bins=[2, 2j, -2, -2j], layout=layout)

        assert rms_magnitude(spectrum) == pytest.approx(2.0)

    def test_parseval(self, rng):
        """Test V equals the RMS of the time frame times sqrt(N)."""
        layout = FrameLayout(frame_len=64, hop=32, fft_len=64, window_kind=WindowKind.RECTANGULAR)
        frame = rng.standard_normal(64)
        spectrum = forward_spectrum(frame, layout)

        assert rms_magnitude(spectrum) == pytest.approx(np.sqrt(np.sum(frame ** 2)))


class TestPsiPerBin:
    """Test suite for the compensation constant."""

    def test_reference_points(self):
        """Test psi = pi^3 at nu = 1 and psi = 1 at nu = pi^3."""
        psi = psi_per_bin(np.array([1.0, math.sqrt(PI3)]), 1.0, PhaseParams())

        assert psi[0] == pytest.approx(PI3)
        assert psi[1] == pytest.approx(1.0)

    def test_nonincreasing_in_nu(self):
        """Test psi never grows with the a posteriori SNR."""
        nu = np.logspace(-3, 4, 12)
        psi = psi_per_bin(np.sqrt(nu), 1.0, PhaseParams())

        assert np.all(np.diff(psi) <= 0)
        assert np.all(psi <= PI3)

    def test_clamped_at_psi_max(self):
        """Test weak bins saturate at psi_max."""
        psi = psi_per_bin(np.array([0.0, 1e-6]), 1.0, PhaseParams(psi_max=5.0))

        assert np.array_equal(psi, [5.0, 5.0])

    def test_zero_frame_is_finite(self):
        """Test an all-zero frame (V = 0) yields psi_max, not NaN."""
        psi = psi_per_bin(np.zeros(8), 0.0, PhaseParams())

        assert np.all(np.isfinite(psi))
        assert np.allclose(psi, PI3)

    def test_constant_mode(self):
        """Test a fixed psi ignores the SNR."""
        params = PhaseParams(psi_mode=PsiMode.fixed(3.7))

        assert np.array_equal(psi_per_bin(np.array([0.1, 10.0]), 2.0, params), [3.7, 3.7])

    def test_per_frame_scope_degenerates_to_pi_cubed(self, rng):
        """Test frame-level nu with V the RMS magnitude is 1."""
        z_mag = np.abs(rng.standard_normal(64))
        v_rms = float(np.sqrt(np.mean(z_mag ** 2)))
        psi = psi_per_bin(z_mag, v_rms, PhaseParams(nu_scope=NuScope.PER_FRAME))

        assert np.allclose(psi, PI3)


class TestCompensation:
    """Test suite for applying the phase offset."""

    def test_phi_structure(self, rng):
        """Test phi = psi * Lambda * V and its zeros at DC and Nyquist."""
        layout = FrameLayout(frame_len=64, hop=48, fft_len=64)
        z = forward_spectrum(rng.standard_normal(64), layout)
        frame = build_compensation(z, PhaseParams(layout2=layout))

        assert np.allclose(frame.phi, frame.psi * frame.lambda_ * frame.v_rms)
        assert frame.phi[0] == 0.0
        assert frame.phi[32] == 0.0

    def test_magnitudes_preserved(self, rng):
        """Test compensation only changes phases."""
        layout = FrameLayout(frame_len=256, hop=192, fft_len=256)
        z = forward_spectrum(rng.standard_normal(256), layout)
        compensated = compensate_spectrum(z, PhaseParams(layout2=layout))

        assert np.allclose(np.abs(compensated.bins), np.abs(z.bins), rtol=0, atol=1e-12)

    def test_noise_frame_energy_not_increased(self):
        """Test the real part of a compensated noise frame carries no extra energy in 95% of frames."""
        params = PhaseParams()
        layout = params.layout2
        rng = np.random.default_rng(21)
        not_increased = 0
        for _ in range(200):
            z = forward_spectrum(0.01 * rng.standard_normal(256), layout)
            before = np.sum(inverse_frame(z) ** 2)
            after = np.sum(inverse_frame(compensate_spectrum(z, params)) ** 2)
            not_increased += after <= before * (1.0 + 1e-12)

        assert not_increased >= 190

    def test_weak_pair_pushed_toward_opposition(self):
        """Test a small conjugate pair is displaced more than a large one."""
        theta, phi = math.pi / 3, 1.0

        def opposition(magnitude):
            pair = np.array([magnitude * np.exp(1j * theta), magnitude * np.exp(-1j * theta)])
            shifted = apply_phase_offset(pair, np.array([phi, -phi]))
            return abs(np.angle(shifted[0]) + np.angle(shifted[1]))

        strong, weak = opposition(4.0), opposition(0.25)

        assert weak > strong
        assert abs(math.cos(strong / 2)) == pytest.approx(0.977, abs=1e-3)
        assert abs(math.cos(weak / 2)) == pytest.approx(0.215, abs=1e-3)

    def test_zero_offset_is_identity(self, rng):
        """Test phi = 0 leaves the spectrum unchanged."""
        bins = rng.standard_normal(16) + 1j * rng.standard_normal(16)

        assert np.allclose(apply_phase_offset(bins, np.zeros(16)), bins, atol=1e-12)


class TestEnhanceStep2:
    """Test suite for the step-2 driver."""

    def test_length_preserved(self):
        """Test output length and sample rate."""
        result = enhance_step2(white_noise(3333, seed=1), PhaseParams())

        assert len(result) == 3333
        assert result.sample_rate_hz == 8000

    def test_empty_rejected(self):
        """Test an empty input is rejected."""
        with pytest.raises(InvalidArgumentError, match="empty"):
            enhance_step2(Waveform(samples=[], sample_rate_hz=8000), PhaseParams())

    def test_constant_zero_is_identity(self):
        """Test psi = 0 reconstructs the input."""
        signal = white_noise(5000, seed=2)
        result = enhance_step2(signal, PhaseParams(psi_mode=PsiMode.fixed(0.0)))

        assert np.allclose(result.samples, signal.samples, atol=1e-9)

    def test_noise_attenuated(self):
        """Test broadband noise loses energy."""
        noise = white_noise(8000, seed=3)

        assert enhance_step2(noise, PhaseParams()).power() < 0.7 * noise.power()

    def test_tone_in_weak_noise_kept(self):
        """Test a 1 kHz tone over weak noise keeps its band energy within 1 dB."""
        signal = Waveform(samples=tone(1000.0, 8000).samples + white_noise(8000, seed=12, scale=0.001).samples,
                          sample_rate_hz=8000)

        result = enhance_step2(signal, PhaseParams())

        loss_db = (band_energy_db(signal, 950.0, 1050.0, 1000, 7000)
                   - band_energy_db(result, 950.0, 1050.0, 1000, 7000))
        assert abs(loss_db) < 1.0

    def test_deterministic(self):
        """Test two runs over the same input are bit-identical."""
        signal = white_noise(6000, seed=13)

        first = enhance_step2(signal, PhaseParams())
        second = enhance_step2(signal, PhaseParams())

        assert np.array_equal(first.samples, second.samples)
