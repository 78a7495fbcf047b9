"""Additive noise mixing at a prescribed SNR."""
import logging

import numpy as np

from ..errors import DegenerateInputError, InvalidArgumentError
from ..models.signal import Waveform


logger = logging.getLogger(__name__)


def noise_segment(noise: Waveform, n_samples: int, seed_offset: int) -> np.ndarray:
    """
    Cut n_samples of noise starting at seed_offset mod (len(noise) - n_samples + 1).

    Raises:
        InvalidArgumentError: If the noise is shorter than n_samples
    """
    if len(noise) < n_samples:
        raise InvalidArgumentError(
            f"Noise has {len(noise)} samples, shorter than the {n_samples}-sample clean signal"
        )
    start = seed_offset % (len(noise) - n_samples + 1)
    return noise.samples[start:start + n_samples]


def noise_gain(clean_power: float, noise_power: float, snr_db: float) -> float:
    """Gain g with 10*log10(clean_power / (g^2 * noise_power)) == snr_db."""
    if clean_power <= 0.0:
        raise DegenerateInputError("Clean signal has zero power")
    if noise_power <= 0.0:
        raise DegenerateInputError("Noise segment has zero power")
    return float(np.sqrt(clean_power / (noise_power * 10.0 ** (snr_db / 10.0))))


def mix_at_snr(clean: Waveform, noise: Waveform, snr_db: float, seed_offset: int = 0) -> Waveform:
    """
    Add noise to clean speech at the requested SNR.

    Both powers are mean squares over the clean-signal length, so the SNR
    of the stored components equals snr_db up to rounding.

    Args:
        clean: Clean speech
        noise: Noise recording at least as long as clean
        snr_db: Target SNR in dB
        seed_offset: Deterministic selector of the noise start sample

    Returns:
        clean + g * noise_segment

    Raises:
        InvalidArgumentError: On a sample-rate mismatch or a short noise
        DegenerateInputError: If clean or the noise segment is silent
    """
    if clean.sample_rate_hz != noise.sample_rate_hz:
        raise InvalidArgumentError(
            f"Sample rate mismatch: clean {clean.sample_rate_hz} Hz, noise {noise.sample_rate_hz} Hz"
        )
    segment = noise_segment(noise, len(clean), seed_offset)
    gain = noise_gain(clean.power(), float(np.mean(segment ** 2)), snr_db)
    logger.debug(f"Mixing at {snr_db} dB: noise gain {gain:.6f}")
    return clean.with_samples(clean.samples + gain * segment)
