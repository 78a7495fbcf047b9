"""Parameter models for the two enhancement steps."""
import math
from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from ..errors import ConfigurationError, InvalidArgumentError
from .noise import NoiseTrackerConfig
from .signal import FrameLayout, WindowKind


def default_step1_layout() -> FrameLayout:
    return FrameLayout(frame_len=96, hop=48, fft_len=256, window_kind=WindowKind.HAMMING)


def default_step2_layout() -> FrameLayout:
    return FrameLayout(frame_len=256, hop=192, fft_len=256, window_kind=WindowKind.GRIFFIN_LIM)


@dataclass(frozen=True)
class SubtractionParams:
    """Step-1 (magnitude compensation) parameters."""
    beta_floor: float = 0.1
    tracker: NoiseTrackerConfig = field(default_factory=NoiseTrackerConfig)
    layout1: FrameLayout = field(default_factory=default_step1_layout)

    def validate(self, sample_rate_hz: int) -> None:
        if not 0.0 <= self.beta_floor < 1.0:
            raise ConfigurationError(
                f"beta_floor must be in [0, 1), got {self.beta_floor}", key="beta_floor"
            )
        self.tracker.validate(sample_rate_hz)

    def min_input_len(self) -> int:
        """Shortest input that can initialize the noise tracker."""
        return self.tracker.n_init_silence * self.layout1.hop + self.layout1.frame_len


class PsiModeKind(Enum):
    SNR_DEPENDENT = "snr"
    CONSTANT = "constant"


@dataclass(frozen=True)
class PsiMode:
    """How the compensation constant psi is chosen per bin."""
    kind: PsiModeKind = PsiModeKind.SNR_DEPENDENT
    constant: float = 0.0

    @classmethod
    def snr_dependent(cls) -> "PsiMode":
        return cls(PsiModeKind.SNR_DEPENDENT)

    @classmethod
    def fixed(cls, value: float) -> "PsiMode":
        return cls(PsiModeKind.CONSTANT, float(value))

    @classmethod
    def parse(cls, text: str) -> "PsiMode":
        """Parse 'snr' or 'constant:<lambda>'."""
        text = text.strip().lower()
        if text == PsiModeKind.SNR_DEPENDENT.value:
            return cls.snr_dependent()
        prefix = PsiModeKind.CONSTANT.value + ":"
        if text.startswith(prefix):
            try:
                return cls.fixed(float(text[len(prefix):]))
            except ValueError:
                pass
        raise InvalidArgumentError(f"Invalid psi mode '{text}' (expected 'snr' or 'constant:<value>')")

    def __str__(self) -> str:
        if self.kind is PsiModeKind.SNR_DEPENDENT:
            return PsiModeKind.SNR_DEPENDENT.value
        return f"{PsiModeKind.CONSTANT.value}:{self.constant!r}"


class NuScope(Enum):
    """Whether the a posteriori SNR is evaluated per bin or once per frame."""
    PER_BIN = "per_bin"
    PER_FRAME = "per_frame"

    @classmethod
    def parse(cls, name: str) -> "NuScope":
        try:
            return cls(name.strip().lower())
        except ValueError:
            raise InvalidArgumentError(f"Invalid nu scope '{name}' (expected per_bin or per_frame)")


@dataclass(frozen=True)
class PhaseParams:
    """Step-2 (phase compensation) parameters."""
    layout2: FrameLayout = field(default_factory=default_step2_layout)
    psi_max: float = math.pi ** 3
    nu_floor: float = 1e-8
    psi_mode: PsiMode = field(default_factory=PsiMode)
    nu_scope: NuScope = NuScope.PER_BIN

    def validate(self) -> None:
        if self.psi_max <= 0:
            raise ConfigurationError(f"psi_max must be > 0, got {self.psi_max}", key="psi_max")
        if self.nu_floor <= 0:
            raise ConfigurationError(f"nu_floor must be > 0, got {self.nu_floor}", key="nu_floor")
        if self.layout2.fft_len < 4:
            raise ConfigurationError(
                f"step-2 fft_len must be >= 4, got {self.layout2.fft_len}", key="step2_fft_len"
            )


@dataclass(frozen=True)
class CompensationFrame:
    """Per-frame quantities of the phase compensation.

    phi equals psi * lambda_ * v_rms elementwise.
    """
    lambda_: np.ndarray
    v_rms: float
    psi: np.ndarray
    phi: np.ndarray
