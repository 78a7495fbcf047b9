"""
Objective quality metrics: overall SNR, segmental SNR and the
noisy-versus-enhanced improvement report.
"""
import logging
from typing import Optional, Tuple

import numpy as np

from ..errors import DegenerateInputError, InvalidArgumentError
from ..models.config import MetricsParams
from ..models.report import MetricsReport
from ..models.signal import Waveform


logger = logging.getLogger(__name__)

EPSILON = 1e-20

# Frames whose clean energy is below this are excluded from SegSNR.
SILENT_FRAME_ENERGY = 1e-10


def _check_pair(clean: Waveform, test: Waveform) -> None:
    if len(clean) != len(test):
        raise InvalidArgumentError(
            f"Length mismatch: clean has {len(clean)} samples, test has {len(test)}"
        )


def overall_snr(clean: Waveform, test: Waveform, max_db: float = 99.0) -> float:
    """
    Whole-signal signal-to-error ratio in dB, clamped above at max_db.

    Raises:
        InvalidArgumentError: If the lengths differ
        DegenerateInputError: If clean has zero energy
    """
    _check_pair(clean, test)
    signal_energy = float(np.sum(clean.samples ** 2))
    if signal_energy <= 0.0:
        raise DegenerateInputError("Clean signal has zero energy")
    error_energy = float(np.sum((clean.samples - test.samples) ** 2))
    snr = 10.0 * np.log10(signal_energy / max(error_energy, EPSILON))
    return float(min(snr, max_db))


def segment_snrs(clean: Waveform, test: Waveform, frame_len: int = 256, hop: int = 128,
                 min_db: float = -10.0, max_db: float = 35.0) -> np.ndarray:
    """
    Clamped per-frame SNRs over full rectangular frames at stride hop.

    Frames with clean energy below SILENT_FRAME_ENERGY are dropped.
    """
    _check_pair(clean, test)
    if frame_len <= 0 or not 0 < hop <= frame_len:
        raise InvalidArgumentError(f"Invalid SegSNR framing: frame_len={frame_len}, hop={hop}")
    if len(clean) < frame_len:
        return np.empty(0)

    view = np.lib.stride_tricks.sliding_window_view
    clean_frames = view(clean.samples, frame_len)[::hop]
    error_frames = view(clean.samples - test.samples, frame_len)[::hop]
    signal_energy = np.sum(clean_frames ** 2, axis=1)
    error_energy = np.sum(error_frames ** 2, axis=1)

    retained = signal_energy >= SILENT_FRAME_ENERGY
    snrs = 10.0 * np.log10(signal_energy[retained] / np.maximum(error_energy[retained], EPSILON))
    return np.clip(snrs, min_db, max_db)


def seg_snr(clean: Waveform, test: Waveform, frame_len: int = 256, hop: int = 128,
            min_db: float = -10.0, max_db: float = 35.0) -> float:
    """
    Segmental SNR: mean of the clamped per-frame SNRs.

    Raises:
        InvalidArgumentError: If the lengths differ
        DegenerateInputError: If no frame is retained
    """
    snrs = segment_snrs(clean, test, frame_len, hop, min_db, max_db)
    if snrs.size == 0:
        raise DegenerateInputError(
            f"No frame of {frame_len} samples with clean energy >= {SILENT_FRAME_ENERGY}"
        )
    return float(np.mean(snrs))


def _both_metrics(clean: Waveform, test: Waveform, params: MetricsParams) -> Tuple[float, float, int]:
    snrs = segment_snrs(
        clean, test, params.frame_len, params.hop, params.segsnr_min_db, params.segsnr_max_db
    )
    if snrs.size == 0:
        raise DegenerateInputError(
            f"No frame of {params.frame_len} samples with clean energy >= {SILENT_FRAME_ENERGY}"
        )
    overall = overall_snr(clean, test, params.overall_snr_max_db)
    return overall, float(np.mean(snrs)), int(snrs.size)


def improvement_report(clean: Waveform, noisy: Waveform, enhanced: Waveform,
                       params: Optional[MetricsParams] = None) -> MetricsReport:
    """
    Score noisy and enhanced against clean and report the improvements.

    Args:
        clean: Reference signal
        noisy: Unprocessed noisy signal
        enhanced: Enhancer output
        params: Framing and clamps (defaults: 256/128, [-10, 35] dB, 99 dB)

    Returns:
        MetricsReport whose improvement fields are enhanced minus noisy
    """
    params = params or MetricsParams()
    ovl_noisy, seg_noisy, n_frames = _both_metrics(clean, noisy, params)
    ovl_enhanced, seg_enhanced, _ = _both_metrics(clean, enhanced, params)

    report = MetricsReport(
        overall_snr_noisy_db=ovl_noisy,
        overall_snr_enhanced_db=ovl_enhanced,
        overall_snr_improvement_db=ovl_enhanced - ovl_noisy,
        segsnr_noisy_db=seg_noisy,
        segsnr_enhanced_db=seg_enhanced,
        segsnr_improvement_db=seg_enhanced - seg_noisy,
        n_frames=n_frames,
    )
    logger.debug(
        f"SegSNR {seg_noisy:.2f} -> {seg_enhanced:.2f} dB, "
        f"overall {ovl_noisy:.2f} -> {ovl_enhanced:.2f} dB over {n_frames} frames"
    )
    return report
