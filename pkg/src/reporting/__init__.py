"""CSV export and console summaries."""

from .csv_export import (
    BATCH_HEADER,
    atomic_write_text,
    batch_rows_to_csv,
    metrics_report_to_csv,
    spectrogram_to_csv,
    write_batch_csv,
    write_metrics_csv,
    write_spectrogram_csv,
)
from .summary import format_batch_summary, format_metrics_report, summarize_batch

__all__ = [
    "BATCH_HEADER",
    "atomic_write_text",
    "batch_rows_to_csv",
    "metrics_report_to_csv",
    "spectrogram_to_csv",
    "write_batch_csv",
    "write_metrics_csv",
    "write_spectrogram_csv",
    "format_batch_summary",
    "format_metrics_report",
    "summarize_batch",
]
