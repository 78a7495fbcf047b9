"""Data models for the NSSP speech enhancement toolkit."""

from .signal import Waveform, FrameLayout, Spectrum, FrameSequence, WindowKind
from .noise import NoiseEstimate, NoiseTrackerConfig
from .params import (
    SubtractionParams,
    PhaseParams,
    PsiMode,
    PsiModeKind,
    NuScope,
    CompensationFrame,
)
from .report import MetricsReport, SpectrogramMatrix, BatchResultRow
from .config import EnhancerConfig, MetricsParams

__all__ = [
    # Signal models
    "Waveform",
    "FrameLayout",
    "Spectrum",
    "FrameSequence",
    "WindowKind",
    # Noise tracking models
    "NoiseEstimate",
    "NoiseTrackerConfig",
    # Step parameters
    "SubtractionParams",
    "PhaseParams",
    "PsiMode",
    "PsiModeKind",
    "NuScope",
    "CompensationFrame",
    # Evaluation results
    "MetricsReport",
    "SpectrogramMatrix",
    "BatchResultRow",
    # Configuration
    "EnhancerConfig",
    "MetricsParams",
]
