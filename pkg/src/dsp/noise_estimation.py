"""
Non-stationary noise estimation.

A log-energy voice activity detector, the silence-updated noise magnitude
spectrum (an average of the initial silence frames, then exponential
smoothing on every later silence frame) and the per-frame tracking factor
alpha derived from the low-frequency band ratio between the noisy frame
and the noise estimate.
"""
import logging
from typing import Sequence

import numpy as np

from ..errors import ConfigurationError, InvalidArgumentError
from ..models.noise import NoiseEstimate, NoiseTrackerConfig
from ..models.signal import FrameLayout


logger = logging.getLogger(__name__)

EPSILON = 1e-12


def is_silence(frame_mag: np.ndarray, noise: NoiseEstimate, cfg: NoiseTrackerConfig) -> bool:
    """
    Classify a frame as silence by its mean magnitude relative to the noise.

    Args:
        frame_mag: Magnitude spectrum of the frame
        noise: Current (initialized) noise estimate
        cfg: Tracker configuration (vad_threshold_db)

    Returns:
        True iff 20*log10(mean(frame_mag) / mean(noise.mag)) < vad_threshold_db
    """
    frame_level = float(np.mean(frame_mag))
    noise_level = max(float(np.mean(noise.mag)), EPSILON)
    if frame_level <= 0.0:
        return True
    ratio_db = 20.0 * np.log10(frame_level / noise_level)
    return bool(ratio_db < cfg.vad_threshold_db)


def absorb_initial(noise: NoiseEstimate, frame_mags: Sequence[np.ndarray],
                   cfg: NoiseTrackerConfig) -> NoiseEstimate:
    """
    Initialize the estimate with the mean of the first N_s frame magnitudes.

    Raises:
        InvalidArgumentError: If the estimate is already initialized or the
            number of frames differs from cfg.n_init_silence
    """
    n_init_silence = cfg.n_init_silence
    if noise.initialized:
        raise InvalidArgumentError("Noise estimate is already initialized")
    if len(frame_mags) != n_init_silence:
        raise InvalidArgumentError(
            f"Expected {n_init_silence} initial silence frames, got {len(frame_mags)}"
        )
    stacked = np.vstack([np.asarray(mag, dtype=np.float64) for mag in frame_mags])
    if np.any(stacked < 0):
        raise InvalidArgumentError("Frame magnitudes must be nonnegative")

    logger.debug(f"Noise estimate initialized from {n_init_silence} frames")
    return NoiseEstimate(
        mag=stacked.mean(axis=0),
        frames_absorbed=noise.frames_absorbed + n_init_silence,
        initialized=True,
    )


def update_noise(noise: NoiseEstimate, silence_mag: np.ndarray,
                 cfg: NoiseTrackerConfig) -> NoiseEstimate:
    """
    Blend a silence frame into the estimate: v_n * old + (1 - v_n) * new.

    Raises:
        InvalidArgumentError: On negative magnitudes, a length mismatch or an
            uninitialized estimate
    """
    if not noise.initialized:
        raise InvalidArgumentError("Noise estimate must be initialized before updates")
    silence_mag = np.asarray(silence_mag, dtype=np.float64)
    if silence_mag.shape != noise.mag.shape:
        raise InvalidArgumentError(
            f"Silence frame has shape {silence_mag.shape}, expected {noise.mag.shape}"
        )
    if np.any(silence_mag < 0):
        raise InvalidArgumentError("Silence frame magnitudes must be nonnegative")

    v_n = cfg.forgetting
    return NoiseEstimate(
        mag=v_n * noise.mag + (1.0 - v_n) * silence_mag,
        frames_absorbed=noise.frames_absorbed + 1,
        initialized=True,
    )


def low_band_bins(layout: FrameLayout, sample_rate_hz: int, band_hz) -> np.ndarray:
    """
    One-sided bins whose center frequency lies inside band_hz (inclusive).

    Raises:
        ConfigurationError: If no bin center falls inside the band
    """
    f_lo, f_hi = band_hz
    k = np.arange(layout.n_one_sided)
    centers = k * sample_rate_hz / layout.fft_len
    selected = k[(centers >= f_lo) & (centers <= f_hi)]
    if selected.size == 0:
        raise ConfigurationError(
            f"Low band [{f_lo}, {f_hi}] Hz contains no bin center "
            f"(bin spacing {layout.bin_hz(sample_rate_hz)} Hz)",
            key="low_band_hi_hz",
        )
    return selected


def tracking_factor(noisy_mag: np.ndarray, noise: NoiseEstimate, cfg: NoiseTrackerConfig,
                    layout: FrameLayout, sample_rate_hz: int) -> float:
    """
    Per-frame over-subtraction weight from the low-band energy ratio.

    alpha = mu * sum_B |Y[k]| / sum_B |D[k]|, clamped to [alpha_min, alpha_max].

    Raises:
        ConfigurationError: If the low band holds no bin
    """
    band = low_band_bins(layout, sample_rate_hz, cfg.low_band_hz)
    noisy_sum = float(np.sum(np.asarray(noisy_mag)[band]))
    noise_sum = max(float(np.sum(noise.mag[band])), EPSILON)
    alpha = cfg.mu * noisy_sum / noise_sum
    return float(np.clip(alpha, cfg.alpha_min, cfg.alpha_max))
