"""Unit tests for the enhancement driver."""
import numpy as np
import pytest

from src.dsp.phase_compensation import enhance_step2
from src.dsp.pipeline import EnhanceMethod, enhance
from src.dsp.spectral_subtraction import enhance_step1
from src.errors import InvalidArgumentError
from src.models import EnhancerConfig
from tests.conftest import voiced_signal, white_noise


@pytest.fixture
def noisy():
    clean = voiced_signal(duration_s=1.0)
    return clean.with_samples(clean.samples + white_noise(len(clean), seed=21).samples)


class TestEnhance:
    """Test suite for enhance()."""

    def test_method_parse(self):
        """Test method lookup by name."""
        assert EnhanceMethod.parse("NSSP") is EnhanceMethod.NSSP
        assert EnhanceMethod.parse("psc") is EnhanceMethod.PSC

        with pytest.raises(InvalidArgumentError, match="Unknown method"):
            EnhanceMethod.parse("wiener")

    def test_nssp_is_step1_then_step2(self, noisy):
        """Test the default method chains both steps."""
        config = EnhancerConfig()
        expected = enhance_step2(enhance_step1(noisy, config.step1), config.step2)

        assert np.array_equal(enhance(noisy, config).samples, expected.samples)

    def test_subtraction_only(self, noisy):
        """Test the step-1-only ablation."""
        config = EnhancerConfig()

        result = enhance(noisy, config, EnhanceMethod.SUBTRACTION)

        assert np.array_equal(result.samples, enhance_step1(noisy, config.step1).samples)

    def test_psc_only(self, noisy):
        """Test the step-2-only ablation."""
        config = EnhancerConfig()

        result = enhance(noisy, config, EnhanceMethod.PSC)

        assert np.array_equal(result.samples, enhance_step2(noisy, config.step2).samples)

    @pytest.mark.parametrize("method", list(EnhanceMethod))
    def test_length_preserving(self, noisy, method):
        """Test every method keeps the input length."""
        assert len(enhance(noisy, EnhancerConfig(), method)) == len(noisy)
