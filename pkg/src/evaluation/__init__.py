"""Objective evaluation harness: mixing, SNR metrics and spectrograms."""

from .mixing import mix_at_snr, noise_gain, noise_segment
from .metrics import improvement_report, overall_snr, seg_snr, segment_snrs
from .spectrogram import spectrogram

__all__ = [
    "mix_at_snr",
    "noise_gain",
    "noise_segment",
    "improvement_report",
    "overall_snr",
    "seg_snr",
    "segment_snrs",
    "spectrogram",
]
