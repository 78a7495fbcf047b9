"""Batch experiment orchestration."""

from .batch import BatchCell, BatchJob, expand_cells, parse_manifest, run_batch, run_cell

__all__ = ["BatchCell", "BatchJob", "expand_cells", "parse_manifest", "run_batch", "run_cell"]
