"""End-to-end enhancement checks on synthetic voiced speech."""
import time
from dataclasses import replace

import numpy as np
import pytest

from src.dsp.pipeline import EnhanceMethod, enhance
from src.evaluation.metrics import improvement_report
from src.evaluation.mixing import mix_at_snr
from src.models import EnhancerConfig, NoiseTrackerConfig, PsiMode
from tests.conftest import voiced_signal, white_noise


def _transparent_config() -> EnhancerConfig:
    """Subtraction clamped off and psi fixed at zero."""
    config = EnhancerConfig()
    step1 = replace(config.step1, tracker=NoiseTrackerConfig(alpha_max=0.0))
    step2 = replace(config.step2, psi_mode=PsiMode.fixed(0.0))
    return replace(config, step1=step1, step2=step2).validate()


class TestTransparency:
    """Test suite for the analysis-modification-synthesis round trip."""

    def test_round_trip_reproduces_input(self):
        """Test a disabled enhancer returns its input over both framings."""
        signal = white_noise(80000, seed=99, scale=0.3)

        start = time.perf_counter()
        result = enhance(signal, _transparent_config())
        elapsed = time.perf_counter() - start

        error = np.linalg.norm(result.samples - signal.samples) / np.linalg.norm(signal.samples)
        assert error < 1e-6
        assert elapsed < 1.0

    def test_round_trip_on_speech(self):
        """Test the silent lead-in and voiced part both survive."""
        clean = voiced_signal()

        result = enhance(clean, _transparent_config())

        assert np.allclose(result.samples, clean.samples, atol=1e-9)


class TestImprovement:
    """Test suite for objective improvement on noisy speech."""

    @pytest.mark.parametrize("snr_db", [-5.0, 0.0])
    def test_positive_improvement(self, snr_db):
        """Test SegSNR and overall SNR improve in at least 90% of 50 trials."""
        config = EnhancerConfig()
        clean = voiced_signal()
        passes = 0

        for seed in range(50):
            noisy = mix_at_snr(clean, white_noise(len(clean), seed=seed), snr_db)
            report = improvement_report(clean, noisy, enhance(noisy, config), config.metrics)
            if report.segsnr_improvement_db > 0 and report.overall_snr_improvement_db > 0:
                passes += 1

        assert passes >= 45

    def test_runtime_for_three_seconds(self):
        """Test the full pipeline on a 3 s utterance."""
        clean = voiced_signal(duration_s=3.0)
        noisy = mix_at_snr(clean, white_noise(len(clean), seed=1), 0.0)

        start = time.perf_counter()
        enhanced = enhance(noisy, EnhancerConfig())

        assert time.perf_counter() - start < 2.0
        assert len(enhanced) == len(noisy)

    def test_psc_baseline_with_constant_psi(self):
        """Test the constant-psi phase-only baseline also runs end to end."""
        config = EnhancerConfig()
        config = replace(config, step2=replace(config.step2, psi_mode=PsiMode.fixed(3.74)))
        clean = voiced_signal()
        noisy = mix_at_snr(clean, white_noise(len(clean), seed=5), 0.0)

        report = improvement_report(clean, noisy, enhance(noisy, config, EnhanceMethod.PSC))

        assert np.isfinite(report.segsnr_improvement_db)
        assert report.n_frames > 0
