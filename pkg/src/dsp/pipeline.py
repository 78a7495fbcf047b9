"""Two-step enhancement driver and its ablation variants."""
import logging
from enum import Enum

from ..errors import InvalidArgumentError
from ..models.config import EnhancerConfig
from ..models.signal import Waveform
from .phase_compensation import enhance_step2
from .spectral_subtraction import enhance_step1


logger = logging.getLogger(__name__)


class EnhanceMethod(Enum):
    """Which steps of the enhancer run."""
    NSSP = "nssp"
    SUBTRACTION = "subtraction"
    PSC = "psc"

    @classmethod
    def parse(cls, name: str) -> "EnhanceMethod":
        try:
            return cls(name.strip().lower())
        except ValueError:
            choices = ", ".join(method.value for method in cls)
            raise InvalidArgumentError(f"Unknown method '{name}' (expected one of: {choices})")


def enhance(noisy: Waveform, config: EnhancerConfig,
            method: EnhanceMethod = EnhanceMethod.NSSP) -> Waveform:
    """
    Enhance a noisy utterance.

    NSSP runs spectral subtraction followed by phase compensation of the
    intermediate signal. SUBTRACTION stops after step 1; PSC applies step 2
    directly to the noisy input.

    Args:
        noisy: Noisy waveform
        config: Validated enhancer configuration
        method: Steps to run

    Returns:
        Enhanced waveform of the same length and sample rate
    """
    if method is EnhanceMethod.PSC:
        enhanced = enhance_step2(noisy, config.step2)
    else:
        enhanced = enhance_step1(noisy, config.step1)
        if method is EnhanceMethod.NSSP:
            enhanced = enhance_step2(enhanced, config.step2)

    logger.debug(f"Enhanced {len(noisy)} samples with method {method.value}")
    return enhanced
