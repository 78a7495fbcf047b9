"""
Step 2: SNR-dependent phase spectrum compensation.

A real, anti-symmetric offset phi[k] = psi[k] * Lambda[k] * V is added to
each complex bin of the intermediate signal's spectrum and only the phase
of the sum is kept. Conjugate pairs whose magnitude is small relative to
phi are pushed toward opposition and cancel in the real part of the
inverse transform; strong components keep their phase.
"""
import logging

import numpy as np

from ..errors import InvalidArgumentError
from ..models.params import CompensationFrame, NuScope, PhaseParams, PsiModeKind
from ..models.signal import Spectrum, Waveform
from .signal_core import (
    forward_spectrum,
    frame_signal,
    inverse_frame,
    overlap_add,
    pad_for_analysis,
    strip_analysis_padding,
)


logger = logging.getLogger(__name__)

EPSILON = 1e-12


def lambda_weights(fft_len: int) -> np.ndarray:
    """
    Anti-symmetric weighting: +1 below Nyquist, -1 above, 0 at DC and Nyquist.

    Raises:
        InvalidArgumentError: If fft_len is odd or smaller than 4
    """
    if fft_len < 4 or fft_len % 2 != 0:
        raise InvalidArgumentError(f"fft_len must be even and >= 4, got {fft_len}")
    half = fft_len // 2
    weights = np.zeros(fft_len)
    weights[1:half] = 1.0
    weights[half + 1:] = -1.0
    return weights


def rms_magnitude(spectrum: Spectrum) -> float:
    """Root mean square of the bin magnitudes."""
    bins = spectrum.bins
    return float(np.sqrt(np.sum(np.abs(bins) ** 2) / bins.size))


def psi_per_bin(z_mag: np.ndarray, v_rms: float, params: PhaseParams) -> np.ndarray:
    """
    Compensation constant per bin.

    SNR-dependent mode: nu[k] = max(|Z[k]|^2 / V^2, nu_floor) and
    psi[k] = min(pi^3 / nu[k], psi_max). With the per-frame scope nu is the
    mean of nu[k] over the frame. Constant mode returns the constant.
    """
    z_mag = np.asarray(z_mag, dtype=np.float64)
    if params.psi_mode.kind is PsiModeKind.CONSTANT:
        return np.full(z_mag.shape, params.psi_mode.constant)

    nu = z_mag ** 2 / max(v_rms ** 2, EPSILON)
    if params.nu_scope is NuScope.PER_FRAME:
        nu = np.full(z_mag.shape, float(np.mean(nu)))
    nu = np.maximum(nu, params.nu_floor)
    return np.minimum(np.pi ** 3 / nu, params.psi_max)


def build_compensation(z: Spectrum, params: PhaseParams) -> CompensationFrame:
    """Compute Lambda, V, psi and phi for one frame."""
    weights = lambda_weights(z.layout.fft_len)
    v_rms = rms_magnitude(z)
    psi = psi_per_bin(np.abs(z.bins), v_rms, params)
    return CompensationFrame(lambda_=weights, v_rms=v_rms, psi=psi, phi=psi * weights * v_rms)


def apply_phase_offset(bins: np.ndarray, phi: np.ndarray) -> np.ndarray:
    """Keep |bins| and take the phase of bins + phi (phi added as a real offset)."""
    bins = np.asarray(bins, dtype=np.complex128)
    return np.abs(bins) * np.exp(1j * np.angle(bins + phi))


def compensate_spectrum(z: Spectrum, params: PhaseParams) -> Spectrum:
    """Phase-compensate one step-2 spectrum; magnitudes are preserved."""
    compensation = build_compensation(z, params)
    return z.with_bins(apply_phase_offset(z.bins, compensation.phi))


def enhance_step2(z: Waveform, params: PhaseParams) -> Waveform:
    """
    Phase-compensate the intermediate signal under its own framing.

    Args:
        z: Intermediate signal from step 1 (or any waveform)
        params: Step-2 parameters

    Returns:
        Enhanced signal with the same length and sample rate

    Raises:
        InvalidArgumentError: If z is empty
    """
    if len(z) == 0:
        raise InvalidArgumentError("Cannot enhance an empty signal")

    layout = params.layout2
    frames = frame_signal(pad_for_analysis(z, layout), layout)
    output_frames = [
        inverse_frame(compensate_spectrum(forward_spectrum(frame, layout), params))
        for frame in frames.frames
    ]
    logger.debug(f"Step 2: {len(frames)} frames, psi mode {params.psi_mode}")
    return strip_analysis_padding(overlap_add(frames.with_frames(output_frames)), layout)
