"""Signal processing core: framing, both enhancement steps and the driver."""

from .signal_core import (
    make_window,
    frame_count,
    frame_signal,
    forward_spectrum,
    inverse_frame,
    overlap_add,
    pad_for_analysis,
    strip_analysis_padding,
)
from .noise_estimation import (
    is_silence,
    absorb_initial,
    update_noise,
    low_band_bins,
    tracking_factor,
)
from .spectral_subtraction import (
    Step1Trace,
    subtract_magnitude,
    recombine_with_noisy_phase,
    enhance_step1,
    enhance_step1_with_trace,
)
from .phase_compensation import (
    lambda_weights,
    rms_magnitude,
    psi_per_bin,
    build_compensation,
    apply_phase_offset,
    compensate_spectrum,
    enhance_step2,
)
from .pipeline import EnhanceMethod, enhance

__all__ = [
    # Analysis-synthesis
    "make_window",
    "frame_count",
    "frame_signal",
    "forward_spectrum",
    "inverse_frame",
    "overlap_add",
    "pad_for_analysis",
    "strip_analysis_padding",
    # Noise estimation
    "is_silence",
    "absorb_initial",
    "update_noise",
    "low_band_bins",
    "tracking_factor",
    # Step 1
    "Step1Trace",
    "subtract_magnitude",
    "recombine_with_noisy_phase",
    "enhance_step1",
    "enhance_step1_with_trace",
    # Step 2
    "lambda_weights",
    "rms_magnitude",
    "psi_per_bin",
    "build_compensation",
    "apply_phase_offset",
    "compensate_spectrum",
    "enhance_step2",
    # Driver
    "EnhanceMethod",
    "enhance",
]
