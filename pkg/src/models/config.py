"""Top-level enhancer configuration."""
from dataclasses import dataclass, field

from ..errors import ConfigurationError
from .params import PhaseParams, SubtractionParams


@dataclass(frozen=True)
class MetricsParams:
    """Framing and clamps of the objective metrics."""
    frame_len: int = 256
    hop: int = 128
    segsnr_min_db: float = -10.0
    segsnr_max_db: float = 35.0
    overall_snr_max_db: float = 99.0
    spectrogram_db_floor: float = -80.0

    def validate(self) -> None:
        if not 0 < self.hop <= self.frame_len:
            raise ConfigurationError(
                f"metrics framing requires 0 < hop <= frame_len, "
                f"got hop={self.hop}, frame_len={self.frame_len}",
                key="metrics_hop",
            )
        if not self.segsnr_min_db < self.segsnr_max_db:
            raise ConfigurationError(
                f"segsnr clamp requires min < max, got [{self.segsnr_min_db}, {self.segsnr_max_db}]",
                key="segsnr_min_db",
            )


@dataclass(frozen=True)
class EnhancerConfig:
    """Every tunable of the two-step enhancer and its evaluation harness.

    The defaults reproduce the published setup: 8 kHz audio, step 1 with
    96-sample Hamming frames at 50% overlap, step 2 with 256-sample
    Griffin-Lim frames at 25% overlap, beta 0.1, v_n 0.167, mu 0.1.
    """
    sample_rate_hz: int = 8000
    step1: SubtractionParams = field(default_factory=SubtractionParams)
    step2: PhaseParams = field(default_factory=PhaseParams)
    metrics: MetricsParams = field(default_factory=MetricsParams)

    def validate(self) -> "EnhancerConfig":
        """Check all invariants; returns self so calls can be chained."""
        if self.sample_rate_hz <= 0:
            raise ConfigurationError(
                f"sample_rate_hz must be positive, got {self.sample_rate_hz}", key="sample_rate_hz"
            )
        self.step1.validate(self.sample_rate_hz)
        self.step2.validate()
        self.metrics.validate()
        return self
