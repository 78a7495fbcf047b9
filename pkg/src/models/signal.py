"""Signal data models: waveforms, frame layouts, spectra and frame sequences."""
from dataclasses import dataclass
from enum import Enum

import numpy as np

from ..errors import InvalidArgumentError


def _frozen_array(values, dtype) -> np.ndarray:
    """Copy values into a read-only 1-D or 2-D array."""
    array = np.array(values, dtype=dtype)
    array.setflags(write=False)
    return array


class WindowKind(Enum):
    """Analysis/synthesis window families."""
    HAMMING = "hamming"
    GRIFFIN_LIM = "griffin_lim"  # Griffin and Lim's modified Hanning
    RECTANGULAR = "rectangular"

    @classmethod
    def parse(cls, name: str) -> "WindowKind":
        """Look up a window kind by its configuration name."""
        try:
            return cls(name.strip().lower())
        except ValueError:
            valid = ", ".join(kind.value for kind in cls)
            raise InvalidArgumentError(f"Unknown window '{name}' (expected one of: {valid})")


@dataclass(frozen=True)
class Waveform:
    """A mono time-domain signal.

    Attributes:
        samples: Real amplitudes, nominally in [-1, 1]
        sample_rate_hz: Sampling rate in Hz
    """
    samples: np.ndarray
    sample_rate_hz: int

    def __post_init__(self):
        samples = _frozen_array(self.samples, np.float64)
        if samples.ndim != 1:
            raise InvalidArgumentError(f"Waveform samples must be 1-D, got shape {samples.shape}")
        if not np.all(np.isfinite(samples)):
            raise InvalidArgumentError("Waveform samples must be finite (no NaN/Inf)")
        if int(self.sample_rate_hz) <= 0:
            raise InvalidArgumentError(f"sample_rate_hz must be positive, got {self.sample_rate_hz}")
        object.__setattr__(self, "samples", samples)
        object.__setattr__(self, "sample_rate_hz", int(self.sample_rate_hz))

    def __len__(self) -> int:
        return len(self.samples)

    @property
    def duration_s(self) -> float:
        return len(self.samples) / self.sample_rate_hz

    def power(self) -> float:
        """Mean square of the samples (0 for an empty waveform)."""
        if len(self.samples) == 0:
            return 0.0
        return float(np.mean(self.samples ** 2))

    def with_samples(self, samples) -> "Waveform":
        """Return a waveform with new samples and the same sample rate."""
        return Waveform(samples=samples, sample_rate_hz=self.sample_rate_hz)


@dataclass(frozen=True)
class FrameLayout:
    """How a signal is cut into frames and transformed.

    Attributes:
        frame_len: Samples per frame
        hop: Stride between frame starts
        fft_len: Transform length (frames are zero-padded up to it)
        window_kind: Window applied at analysis and again at synthesis
    """
    frame_len: int
    hop: int
    fft_len: int
    window_kind: WindowKind = WindowKind.HAMMING

    def __post_init__(self):
        if not 0 < self.hop <= self.frame_len <= self.fft_len:
            raise InvalidArgumentError(
                f"FrameLayout requires 0 < hop <= frame_len <= fft_len, "
                f"got hop={self.hop}, frame_len={self.frame_len}, fft_len={self.fft_len}"
            )
        if self.fft_len % 2 != 0:
            raise InvalidArgumentError(f"fft_len must be even, got {self.fft_len}")

    @property
    def overlap(self) -> int:
        return self.frame_len - self.hop

    @property
    def n_one_sided(self) -> int:
        """Number of bins from DC to Nyquist inclusive."""
        return self.fft_len // 2 + 1

    def bin_hz(self, sample_rate_hz: int) -> float:
        """Frequency spacing between adjacent bins."""
        return sample_rate_hz / self.fft_len


@dataclass(frozen=True)
class Spectrum:
    """Complex DFT bins of one frame."""
    bins: np.ndarray
    layout: FrameLayout

    def __post_init__(self):
        bins = _frozen_array(self.bins, np.complex128)
        if bins.shape != (self.layout.fft_len,):
            raise InvalidArgumentError(
                f"Spectrum needs {self.layout.fft_len} bins, got shape {bins.shape}"
            )
        object.__setattr__(self, "bins", bins)

    @property
    def magnitude(self) -> np.ndarray:
        return np.abs(self.bins)

    def with_bins(self, bins) -> "Spectrum":
        return Spectrum(bins=bins, layout=self.layout)


@dataclass(frozen=True)
class FrameSequence:
    """Ordered real-valued frames cut from one waveform.

    Frame t (0-based) starts at sample t * hop of the source; the last
    frames are zero-padded to frame_len.
    """
    frames: np.ndarray  # shape (n_frames, frame_len)
    layout: FrameLayout
    original_len: int
    sample_rate_hz: int

    def __post_init__(self):
        frames = _frozen_array(self.frames, np.float64)
        if frames.ndim != 2 or frames.shape[1] != self.layout.frame_len:
            raise InvalidArgumentError(
                f"Frames must have shape (n, {self.layout.frame_len}), got {frames.shape}"
            )
        object.__setattr__(self, "frames", frames)

    def __len__(self) -> int:
        return self.frames.shape[0]

    def with_frames(self, frames) -> "FrameSequence":
        """Return a sequence of modified frames sharing this layout."""
        return FrameSequence(
            frames=frames,
            layout=self.layout,
            original_len=self.original_len,
            sample_rate_hz=self.sample_rate_hz,
        )
