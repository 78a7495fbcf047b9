"""Evaluation result models."""
from dataclasses import dataclass
from typing import Optional

import numpy as np


@dataclass
class MetricsReport:
    """Objective scores of one noisy/enhanced pair against the clean reference."""
    overall_snr_noisy_db: float
    overall_snr_enhanced_db: float
    overall_snr_improvement_db: float
    segsnr_noisy_db: float
    segsnr_enhanced_db: float
    segsnr_improvement_db: float
    n_frames: int


@dataclass
class SpectrogramMatrix:
    """dB magnitudes, rows = one-sided bins, columns = frames."""
    values: np.ndarray
    bin_hz: float
    hop_s: float

    @property
    def n_bins(self) -> int:
        return self.values.shape[0]

    @property
    def n_frames(self) -> int:
        return self.values.shape[1]


@dataclass
class BatchResultRow:
    """One (file, noise, SNR) cell of a batch experiment."""
    file_id: str
    noise_id: str
    snr_db: float
    segsnr_improvement_db: float
    overall_snr_improvement_db: float
    pesq_external: Optional[float] = None  # filled by external tools
