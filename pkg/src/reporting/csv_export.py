"""
CSV export of batch results, evaluation reports and spectrograms.

All numbers use fixed 6-decimal formatting and LF line endings. Files are
written to a temporary sibling first and moved into place with os.replace,
so a crash never leaves a partial CSV behind.
"""
import csv
import io
import logging
import os
import tempfile
from dataclasses import fields
from pathlib import Path
from typing import Iterable, List, Sequence, Union

from ..models.report import BatchResultRow, MetricsReport, SpectrogramMatrix


logger = logging.getLogger(__name__)

BATCH_HEADER = ["file_id", "noise_id", "snr_db", "segsnr_impr_db", "ovl_snr_impr_db", "pesq_external"]

PathLike = Union[str, Path]


def _fmt(value: float) -> str:
    return f"{value:.6f}"


def _to_csv(rows: Iterable[Sequence]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerows(rows)
    return buffer.getvalue()


def atomic_write_text(path: PathLike, text: str) -> None:
    """Write text to path through a temporary file in the same directory."""
    target = Path(path)
    directory = target.parent if str(target.parent) else Path(".")
    fd, temp_name = tempfile.mkstemp(prefix=f".{target.name}.", suffix=".tmp", dir=directory)
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as handle:
            handle.write(text)
        os.replace(temp_name, target)
    except BaseException:
        if os.path.exists(temp_name):
            os.unlink(temp_name)
        raise


def batch_rows_to_csv(rows: Iterable[BatchResultRow]) -> str:
    """Render batch rows in order, one line per (file, noise, SNR) cell."""
    lines: List[List[str]] = [BATCH_HEADER]
    for row in rows:
        lines.append([
            row.file_id,
            row.noise_id,
            _fmt(row.snr_db),
            _fmt(row.segsnr_improvement_db),
            _fmt(row.overall_snr_improvement_db),
            "" if row.pesq_external is None else _fmt(row.pesq_external),
        ])
    return _to_csv(lines)


def write_batch_csv(path: PathLike, rows: Sequence[BatchResultRow]) -> None:
    atomic_write_text(path, batch_rows_to_csv(rows))
    logger.info(f"Wrote {len(rows)} batch rows to {path}")


def metrics_report_to_csv(report: MetricsReport) -> str:
    """Header of MetricsReport field names and one data row."""
    names = [f.name for f in fields(MetricsReport)]
    values = [
        str(value) if isinstance(value, int) else _fmt(value)
        for value in (getattr(report, name) for name in names)
    ]
    return _to_csv([names, values])


def write_metrics_csv(path: PathLike, report: MetricsReport) -> None:
    atomic_write_text(path, metrics_report_to_csv(report))
    logger.info(f"Wrote evaluation report to {path}")


def spectrogram_to_csv(matrix: SpectrogramMatrix) -> str:
    """First row `bin_hz,<v>,hop_s,<v>`, then one row per bin, one column per frame."""
    lines: List[List[str]] = [["bin_hz", _fmt(matrix.bin_hz), "hop_s", _fmt(matrix.hop_s)]]
    lines.extend([_fmt(value) for value in row] for row in matrix.values)
    return _to_csv(lines)


def write_spectrogram_csv(path: PathLike, matrix: SpectrogramMatrix) -> None:
    atomic_write_text(path, spectrogram_to_csv(matrix))
    logger.info(f"Wrote {matrix.n_bins}x{matrix.n_frames} spectrogram to {path}")
