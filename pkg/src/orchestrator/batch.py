"""
Batch experiments: every (clean file, noise file, SNR) cell of a manifest
is mixed, enhanced and scored.

Manifest lines read `clean_path noise_path snr1,snr2,...` (the SNR list
may also be space separated). Blank lines and `#` comments are ignored and
relative paths resolve against the manifest's directory.
"""
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import Dict, List, Tuple, Union

from ..audio.wav import read_wav
from ..dsp.pipeline import EnhanceMethod, enhance
from ..errors import InvalidArgumentError, ManifestError
from ..evaluation.metrics import improvement_report
from ..evaluation.mixing import mix_at_snr
from ..models.config import EnhancerConfig
from ..models.report import BatchResultRow
from ..models.signal import Waveform


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BatchJob:
    """One manifest line."""
    clean_path: Path
    noise_path: Path
    snrs_db: Tuple[float, ...]
    line_number: int


@dataclass(frozen=True)
class BatchCell:
    """One (clean, noise, SNR) experiment; index is its position in manifest order."""
    index: int
    job: BatchJob
    snr_db: float


def _parse_snrs(tokens: List[str], line_number: int) -> Tuple[float, ...]:
    text = " ".join(tokens).replace(",", " ").replace("−", "-")
    try:
        snrs = tuple(float(token) for token in text.split())
    except ValueError:
        raise ManifestError(f"Invalid SNR list '{' '.join(tokens)}'", line_number)
    if not snrs:
        raise ManifestError("Missing SNR list", line_number)
    return snrs


def parse_manifest(path: Union[str, Path]) -> List[BatchJob]:
    """
    Read a batch manifest.

    Raises:
        ManifestError: If the file cannot be read or a line is malformed
    """
    manifest_path = Path(path)
    try:
        text = manifest_path.read_text(encoding="utf-8")
    except OSError as e:
        raise ManifestError(f"Cannot read manifest {manifest_path}: {e}")

    base = manifest_path.parent
    jobs = []
    for line_number, line in enumerate(text.splitlines(), start=1):
        content = line.split("#", 1)[0].strip()
        if not content:
            continue
        tokens = content.split()
        if len(tokens) < 3:
            raise ManifestError(
                f"Expected 'clean_path noise_path snr1,snr2,...', got '{content}'", line_number
            )
        jobs.append(BatchJob(
            clean_path=base / tokens[0],
            noise_path=base / tokens[1],
            snrs_db=_parse_snrs(tokens[2:], line_number),
            line_number=line_number,
        ))
    logger.debug(f"Manifest {manifest_path}: {len(jobs)} lines")
    return jobs


def expand_cells(jobs: List[BatchJob]) -> List[BatchCell]:
    """Flatten jobs into cells, SNRs in listed order."""
    cells = []
    for job in jobs:
        for snr_db in job.snrs_db:
            cells.append(BatchCell(index=len(cells), job=job, snr_db=snr_db))
    return cells


def _load_audio(jobs: List[BatchJob]) -> Dict[Path, Waveform]:
    audio: Dict[Path, Waveform] = {}
    for job in jobs:
        for path in (job.clean_path, job.noise_path):
            if path not in audio:
                audio[path] = read_wav(path)
        clean, noise = audio[job.clean_path], audio[job.noise_path]
        if clean.sample_rate_hz != noise.sample_rate_hz:
            raise InvalidArgumentError(
                f"Manifest line {job.line_number}: {job.clean_path.name} is "
                f"{clean.sample_rate_hz} Hz but {job.noise_path.name} is {noise.sample_rate_hz} Hz"
            )
    return audio


def run_cell(cell: BatchCell, clean: Waveform, noise: Waveform, config: EnhancerConfig,
             method: EnhanceMethod = EnhanceMethod.NSSP) -> BatchResultRow:
    """Mix at the cell's SNR, enhance, and score against the clean file."""
    noisy = mix_at_snr(clean, noise, cell.snr_db, seed_offset=cell.index)
    enhanced = enhance(noisy, config, method)
    report = improvement_report(clean, noisy, enhanced, config.metrics)
    return BatchResultRow(
        file_id=cell.job.clean_path.stem,
        noise_id=cell.job.noise_path.stem,
        snr_db=cell.snr_db,
        segsnr_improvement_db=report.segsnr_improvement_db,
        overall_snr_improvement_db=report.overall_snr_improvement_db,
    )


def run_batch(manifest_path: Union[str, Path], config: EnhancerConfig,
              method: EnhanceMethod = EnhanceMethod.NSSP, workers: int = 1) -> List[BatchResultRow]:
    """
    Run every cell of a manifest.

    Args:
        manifest_path: Manifest file
        config: Enhancer configuration
        method: Enhancement variant
        workers: Thread pool size

    Returns:
        Result rows in manifest order regardless of completion order

    Raises:
        ManifestError: On an unreadable or malformed manifest
        InvalidArgumentError: On a clean/noise sample-rate mismatch
    """
    if workers < 1:
        raise InvalidArgumentError(f"workers must be >= 1, got {workers}")

    jobs = parse_manifest(manifest_path)
    audio = _load_audio(jobs)
    cells = expand_cells(jobs)
    logger.info(f"Running {len(cells)} batch cells with {workers} worker(s), method {method.value}")

    def _run(cell: BatchCell) -> BatchResultRow:
        row = run_cell(cell, audio[cell.job.clean_path], audio[cell.job.noise_path], config, method)
        logger.info(
            f"[{cell.index + 1}/{len(cells)}] {row.file_id} + {row.noise_id} @ {row.snr_db:g} dB: "
            f"SegSNR {row.segsnr_improvement_db:+.2f} dB, overall {row.overall_snr_improvement_db:+.2f} dB"
        )
        return row

    with ThreadPoolExecutor(max_workers=workers) as executor:
        return list(executor.map(_run, cells))
