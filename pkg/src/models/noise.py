"""Noise tracking data models."""
from dataclasses import dataclass
from typing import Tuple

import numpy as np

from ..errors import ConfigurationError, InvalidArgumentError


@dataclass(frozen=True)
class NoiseEstimate:
    """Running noise magnitude spectrum and its silence bookkeeping.

    Attributes:
        mag: Noise magnitude per bin (fft_len values, all >= 0)
        frames_absorbed: Silence frames consumed so far
        initialized: True once the initial silence frames were averaged
    """
    mag: np.ndarray
    frames_absorbed: int = 0
    initialized: bool = False

    def __post_init__(self):
        mag = np.array(self.mag, dtype=np.float64)
        if mag.ndim != 1:
            raise InvalidArgumentError(f"Noise magnitude must be 1-D, got shape {mag.shape}")
        if np.any(mag < 0):
            raise InvalidArgumentError("Noise magnitudes must be nonnegative")
        mag.setflags(write=False)
        object.__setattr__(self, "mag", mag)

    @classmethod
    def empty(cls, fft_len: int) -> "NoiseEstimate":
        """An uninitialized estimate with all-zero magnitudes."""
        return cls(mag=np.zeros(fft_len), frames_absorbed=0, initialized=False)


@dataclass(frozen=True)
class NoiseTrackerConfig:
    """Tunables of the silence-updated noise tracker.

    Defaults follow the constants of the two-step method: forgetting
    factor 0.167, mu 0.1, and a [0, 50] Hz low band.
    """
    n_init_silence: int = 8
    forgetting: float = 0.167
    mu: float = 0.1
    low_band_hz: Tuple[float, float] = (0.0, 50.0)
    vad_threshold_db: float = 3.0
    alpha_min: float = 0.0
    alpha_max: float = 10.0

    def validate(self, sample_rate_hz: int) -> None:
        """Check every invariant, raising ConfigurationError on the first violation."""
        if self.n_init_silence < 1:
            raise ConfigurationError(
                f"n_init_silence must be >= 1, got {self.n_init_silence}", key="n_init_silence"
            )
        if not 0.0 <= self.forgetting <= 1.0:
            raise ConfigurationError(
                f"forgetting must be in [0, 1], got {self.forgetting}", key="forgetting"
            )
        if self.mu <= 0:
            raise ConfigurationError(f"mu must be > 0, got {self.mu}", key="mu")
        f_lo, f_hi = self.low_band_hz
        if not 0.0 <= f_lo < f_hi <= sample_rate_hz / 2:
            raise ConfigurationError(
                f"low band must satisfy 0 <= lo < hi <= sample_rate/2 ({sample_rate_hz / 2}), "
                f"got [{f_lo}, {f_hi}]",
                key="low_band_hi_hz",
            )
        if not 0.0 <= self.alpha_min <= self.alpha_max:
            raise ConfigurationError(
                f"alpha clamp must satisfy 0 <= alpha_min <= alpha_max, "
                f"got [{self.alpha_min}, {self.alpha_max}]",
                key="alpha_min",
            )
