"""
Step 1: magnitude compensation by spectral subtraction.

The noisy magnitude has alpha times the noise estimate subtracted from it;
non-positive results are replaced by beta times the noisy magnitude. The
modified magnitude is recombined with the noisy phase and resynthesized
into the intermediate signal z[n].
"""
import logging
from dataclasses import dataclass, field
from typing import List, Tuple

import numpy as np

from ..errors import InvalidArgumentError, TooShortInputError
from ..models.noise import NoiseEstimate
from ..models.params import SubtractionParams
from ..models.signal import Spectrum, Waveform
from .noise_estimation import absorb_initial, is_silence, tracking_factor, update_noise
from .signal_core import (
    forward_spectrum,
    frame_signal,
    inverse_frame,
    overlap_add,
    pad_for_analysis,
    strip_analysis_padding,
)


logger = logging.getLogger(__name__)


@dataclass
class Step1Trace:
    """Per-frame record of the step-1 fold.

    alphas and silence hold one entry per frame after initialization.
    """
    n_frames: int = 0
    n_init_frames: int = 0
    alphas: List[float] = field(default_factory=list)
    silence: List[bool] = field(default_factory=list)
    noise_updates: int = 0

    @property
    def silence_frames(self) -> int:
        return sum(self.silence)


def subtract_magnitude(noisy_mag: np.ndarray, noise_mag: np.ndarray, alpha: float,
                       beta_floor: float) -> np.ndarray:
    """
    Subtract alpha * noise from the noisy magnitude, flooring at beta * noisy.

    Raises:
        InvalidArgumentError: If the vectors differ in length
    """
    noisy_mag = np.asarray(noisy_mag, dtype=np.float64)
    noise_mag = np.asarray(noise_mag, dtype=np.float64)
    if noisy_mag.shape != noise_mag.shape:
        raise InvalidArgumentError(
            f"Magnitude length mismatch: noisy {noisy_mag.shape} vs noise {noise_mag.shape}"
        )
    difference = noisy_mag - alpha * noise_mag
    return np.where(difference > 0, difference, beta_floor * noisy_mag)


def recombine_with_noisy_phase(z_mag: np.ndarray, noisy: Spectrum) -> Spectrum:
    """
    Attach the phase of the noisy spectrum to a modified magnitude.

    Bins where the noisy spectrum is exactly zero get phase 0.
    """
    z_mag = np.asarray(z_mag, dtype=np.float64)
    if z_mag.shape != noisy.bins.shape:
        raise InvalidArgumentError(
            f"Magnitude has shape {z_mag.shape}, spectrum has {noisy.bins.shape}"
        )
    noisy_mag = np.abs(noisy.bins)
    unit = np.ones_like(noisy.bins)
    nonzero = noisy_mag > 0
    unit[nonzero] = noisy.bins[nonzero] / noisy_mag[nonzero]
    return noisy.with_bins(z_mag * unit)


def enhance_step1_with_trace(noisy: Waveform, params: SubtractionParams) -> Tuple[Waveform, Step1Trace]:
    """
    Run spectral subtraction over an utterance and report the per-frame fold.

    The first N_s frames initialize the noise estimate and pass through
    unmodified. Every later frame is classified by the VAD; silence frames
    update the noise estimate; alpha is recomputed for every frame.

    Args:
        noisy: Noisy input
        params: Step-1 parameters

    Returns:
        The intermediate signal z[n] (same length and rate) and the trace

    Raises:
        TooShortInputError: If the input cannot initialize the noise estimate
    """
    tracker = params.tracker
    layout = params.layout1
    min_len = params.min_input_len()
    if len(noisy) < min_len:
        raise TooShortInputError(
            f"Input has {len(noisy)} samples; at least {min_len} are needed to "
            f"initialize the noise estimate from {tracker.n_init_silence} frames"
        )

    frames = frame_signal(pad_for_analysis(noisy, layout), layout)
    noise = NoiseEstimate.empty(layout.fft_len)
    initial_mags: List[np.ndarray] = []
    output_frames: List[np.ndarray] = []
    trace = Step1Trace(n_frames=len(frames))

    for frame in frames.frames:
        spectrum = forward_spectrum(frame, layout)
        noisy_mag = np.abs(spectrum.bins)

        if not noise.initialized:
            initial_mags.append(noisy_mag)
            output_frames.append(inverse_frame(spectrum))
            trace.n_init_frames += 1
            if len(initial_mags) == tracker.n_init_silence:
                noise = absorb_initial(noise, initial_mags, tracker)
            continue

        silent = is_silence(noisy_mag, noise, tracker)
        if silent:
            noise = update_noise(noise, noisy_mag, tracker)
            trace.noise_updates += 1
        alpha = tracking_factor(noisy_mag, noise, tracker, layout, noisy.sample_rate_hz)
        z_mag = subtract_magnitude(noisy_mag, noise.mag, alpha, params.beta_floor)
        output_frames.append(inverse_frame(recombine_with_noisy_phase(z_mag, spectrum)))

        trace.alphas.append(alpha)
        trace.silence.append(silent)

    intermediate = strip_analysis_padding(overlap_add(frames.with_frames(output_frames)), layout)

    if trace.alphas:
        logger.debug(
            f"Step 1: {trace.n_frames} frames, {trace.silence_frames} silence, "
            f"alpha in [{min(trace.alphas):.3f}, {max(trace.alphas):.3f}]"
        )
    return intermediate, trace


def enhance_step1(noisy: Waveform, params: SubtractionParams) -> Waveform:
    """Spectral subtraction of an utterance; see enhance_step1_with_trace."""
    intermediate, _ = enhance_step1_with_trace(noisy, params)
    return intermediate
