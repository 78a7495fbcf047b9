"""Log-magnitude spectrogram matrices for visual comparison."""
import numpy as np

from ..dsp.signal_core import forward_spectrum, frame_signal
from ..errors import InvalidArgumentError
from ..models.report import SpectrogramMatrix
from ..models.signal import FrameLayout, Waveform


def spectrogram(signal: Waveform, layout: FrameLayout, db_floor: float = -80.0) -> SpectrogramMatrix:
    """
    dB magnitudes of the one-sided bins of every frame, floored at db_floor.

    Rows are bins 0..fft_len/2, columns are frames.

    Raises:
        InvalidArgumentError: If the signal is not longer than one frame
    """
    if len(signal) <= layout.frame_len:
        raise InvalidArgumentError(
            f"Signal has {len(signal)} samples, a spectrogram needs more than {layout.frame_len}"
        )
    frames = frame_signal(signal, layout)
    floor = 10.0 ** (db_floor / 20.0)
    columns = [
        np.abs(forward_spectrum(frame, layout).bins[:layout.n_one_sided])
        for frame in frames.frames
    ]
    values = 20.0 * np.log10(np.maximum(np.column_stack(columns), floor))
    return SpectrogramMatrix(
        values=values,
        bin_hz=layout.bin_hz(signal.sample_rate_hz),
        hop_s=layout.hop / signal.sample_rate_hz,
    )
