"""Human-readable tables for evaluation and batch results."""
from collections import OrderedDict
from typing import Dict, List, Sequence, Tuple

import numpy as np
from tabulate import tabulate

from ..models.report import BatchResultRow, MetricsReport


def summarize_batch(rows: Sequence[BatchResultRow]) -> List[Dict[str, object]]:
    """
    Mean improvements per (noise, SNR) cell, in first-seen order.

    Returns:
        One dict per cell with noise_id, snr_db, files, segsnr_impr_db and
        ovl_snr_impr_db
    """
    groups: "OrderedDict[Tuple[str, float], List[BatchResultRow]]" = OrderedDict()
    for row in rows:
        groups.setdefault((row.noise_id, row.snr_db), []).append(row)

    summaries = []
    for (noise_id, snr_db), members in groups.items():
        summaries.append({
            "noise_id": noise_id,
            "snr_db": snr_db,
            "files": len(members),
            "segsnr_impr_db": float(np.mean([m.segsnr_improvement_db for m in members])),
            "ovl_snr_impr_db": float(np.mean([m.overall_snr_improvement_db for m in members])),
        })
    return summaries


def format_batch_summary(rows: Sequence[BatchResultRow]) -> str:
    """Grid table of mean SegSNR and overall SNR improvement per noise and SNR."""
    summaries = summarize_batch(rows)
    if not summaries:
        return "No batch results"

    headers = ["Noise", "SNR (dB)", "Files", "SegSNR impr. (dB)", "Overall SNR impr. (dB)"]
    table = [
        [s["noise_id"], s["snr_db"], s["files"], s["segsnr_impr_db"], s["ovl_snr_impr_db"]]
        for s in summaries
    ]
    return tabulate(table, headers=headers, tablefmt="grid", floatfmt=".2f")


def format_metrics_report(report: MetricsReport) -> str:
    headers = ["Metric", "Noisy (dB)", "Enhanced (dB)", "Improvement (dB)"]
    table = [
        ["SegSNR", report.segsnr_noisy_db, report.segsnr_enhanced_db, report.segsnr_improvement_db],
        ["Overall SNR", report.overall_snr_noisy_db, report.overall_snr_enhanced_db,
         report.overall_snr_improvement_db],
    ]
    summary = tabulate(table, headers=headers, tablefmt="grid", floatfmt=".2f")
    return summary + f"\nFrames scored: {report.n_frames}"
