"""
Analysis-modification-synthesis substrate.

Framing, window functions, per-frame forward/inverse DFT and weighted
overlap-add (WOLA) resynthesis. The window is applied inside
forward_spectrum and once more at synthesis; overlap_add divides by the
summed squared window so that unmodified frames reconstruct the input
exactly for any window/hop pair.
"""
import logging
from functools import lru_cache

import numpy as np
from scipy import fft as sp_fft
from scipy.signal import windows

from ..errors import InvalidArgumentError
from ..models.signal import FrameLayout, FrameSequence, Spectrum, Waveform, WindowKind


logger = logging.getLogger(__name__)

# 2 / sqrt(4 * 0.25 + 2 * 0.25)
GRIFFIN_LIM_GAIN = 2.0 / np.sqrt(1.5)

# Summed window power at or below this is treated as uncovered.
WINDOW_POWER_FLOOR = 1e-10


def make_window(kind: WindowKind, frame_len: int) -> np.ndarray:
    """
    Build a window of frame_len samples.

    Hamming uses the symmetric (N - 1) convention; the Griffin-Lim modified
    Hanning uses the (n + 0.5) / N phase scaled by 2 / sqrt(1.5).

    Args:
        kind: Window family
        frame_len: Number of samples (>= 2)

    Returns:
        Read-only window vector

    Raises:
        InvalidArgumentError: If frame_len < 2
    """
    if frame_len < 2:
        raise InvalidArgumentError(f"Window length must be >= 2, got {frame_len}")
    return _cached_window(kind, int(frame_len))


@lru_cache(maxsize=32)
def _cached_window(kind: WindowKind, frame_len: int) -> np.ndarray:
    if kind is WindowKind.HAMMING:
        window = windows.hamming(frame_len, sym=True)
    elif kind is WindowKind.GRIFFIN_LIM:
        n = np.arange(frame_len)
        window = GRIFFIN_LIM_GAIN * (0.5 - 0.5 * np.cos(2.0 * np.pi * (n + 0.5) / frame_len))
    else:
        window = np.ones(frame_len)
    window = np.asarray(window, dtype=np.float64)
    window.setflags(write=False)
    return window


def frame_count(n_samples: int, hop: int) -> int:
    """Number of frames: one starting at every multiple of hop below n_samples."""
    return -(-n_samples // hop)


def frame_signal(signal: Waveform, layout: FrameLayout) -> FrameSequence:
    """
    Cut a waveform into frames of layout.frame_len at stride layout.hop.

    No window is applied here. Trailing frames are zero-padded.

    Raises:
        InvalidArgumentError: If the signal is empty
    """
    n_samples = len(signal)
    if n_samples == 0:
        raise InvalidArgumentError("Cannot frame an empty signal")

    n_frames = frame_count(n_samples, layout.hop)
    padded = np.zeros((n_frames - 1) * layout.hop + layout.frame_len)
    padded[:n_samples] = signal.samples
    frames = np.lib.stride_tricks.sliding_window_view(padded, layout.frame_len)[::layout.hop]

    return FrameSequence(
        frames=frames[:n_frames],
        layout=layout,
        original_len=n_samples,
        sample_rate_hz=signal.sample_rate_hz,
    )


def forward_spectrum(frame: np.ndarray, layout: FrameLayout) -> Spectrum:
    """
    Window a frame, zero-pad it to fft_len and take its DFT.

    Raises:
        InvalidArgumentError: If the frame length differs from layout.frame_len
    """
    frame = np.asarray(frame, dtype=np.float64)
    if frame.shape != (layout.frame_len,):
        raise InvalidArgumentError(
            f"Frame must have {layout.frame_len} samples, got shape {frame.shape}"
        )
    windowed = frame * make_window(layout.window_kind, layout.frame_len)
    return Spectrum(bins=sp_fft.fft(windowed, n=layout.fft_len), layout=layout)


def inverse_frame(spectrum: Spectrum) -> np.ndarray:
    """Inverse DFT, keep the real part, truncate to frame_len."""
    time_signal = sp_fft.ifft(spectrum.bins)
    return np.real(time_signal)[:spectrum.layout.frame_len]


def overlap_add(frames: FrameSequence) -> Waveform:
    """
    Weighted overlap-add with window-power normalization.

    Each frame is multiplied by the synthesis window, accumulated at stride
    hop, and divided by the summed squared window wherever that sum exceeds
    WINDOW_POWER_FLOOR. The result is truncated to original_len.

    Raises:
        InvalidArgumentError: If there are no frames
    """
    n_frames = len(frames)
    if n_frames == 0:
        raise InvalidArgumentError("Cannot overlap-add an empty frame sequence")

    layout = frames.layout
    window = make_window(layout.window_kind, layout.frame_len)
    total_len = (n_frames - 1) * layout.hop + layout.frame_len
    accumulated = np.zeros(total_len)
    window_power = np.zeros(total_len)
    squared = window ** 2

    for index, frame in enumerate(frames.frames):
        start = index * layout.hop
        accumulated[start:start + layout.frame_len] += frame * window
        window_power[start:start + layout.frame_len] += squared

    output = np.zeros(total_len)
    covered = window_power > WINDOW_POWER_FLOOR
    output[covered] = accumulated[covered] / window_power[covered]

    return Waveform(samples=output[:frames.original_len], sample_rate_hz=frames.sample_rate_hz)


def pad_for_analysis(signal: Waveform, layout: FrameLayout) -> Waveform:
    """Prepend frame_len - hop zeros so every sample is away from a lone window edge."""
    lead = np.zeros(layout.overlap)
    return signal.with_samples(np.concatenate([lead, signal.samples]))


def strip_analysis_padding(signal: Waveform, layout: FrameLayout) -> Waveform:
    """Undo pad_for_analysis."""
    return signal.with_samples(signal.samples[layout.overlap:])
