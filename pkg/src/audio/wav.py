"""
16-bit PCM mono WAV reading and writing.

The RIFF chunk list is walked first so that malformed headers and
unsupported encodings are reported with the offending field or byte
offset; the sample data itself is decoded by scipy.io.wavfile.
"""
import io
import logging
import struct
from pathlib import Path
from typing import Dict, Tuple, Union

import numpy as np
from scipy.io import wavfile

from ..errors import UnsupportedFormatError, WavParseError
from ..models.signal import Waveform


logger = logging.getLogger(__name__)

PCM_SCALE = 32768.0
WAVE_FORMAT_PCM = 1
WAVE_FORMAT_EXTENSIBLE = 0xFFFE
# KSDATAFORMAT_SUBTYPE_* GUIDs differ only in their first two bytes
SUBFORMAT_GUID_TAIL = b"\x00\x00\x00\x00\x10\x00\x80\x00\x00\xaa\x00\x38\x9b\x71"

PathLike = Union[str, Path]


def _walk_chunks(raw: bytes) -> Dict[bytes, Tuple[int, int]]:
    """Map chunk id to (data offset, data size) for every top-level chunk."""
    if len(raw) < 12:
        raise WavParseError("File too short for a RIFF header", offset=len(raw))
    if raw[0:4] != b"RIFF":
        raise WavParseError(f"Expected 'RIFF', found {raw[0:4]!r}", offset=0)
    if raw[8:12] != b"WAVE":
        raise WavParseError(f"Expected 'WAVE', found {raw[8:12]!r}", offset=8)

    chunks: Dict[bytes, Tuple[int, int]] = {}
    offset = 12
    while offset + 8 <= len(raw):
        chunk_id, size = struct.unpack_from("<4sI", raw, offset)
        data_offset = offset + 8
        if chunk_id not in chunks:
            chunks[chunk_id] = (data_offset, size)
        # chunks are word aligned
        offset = data_offset + size + (size & 1)
    if offset < len(raw):
        raise WavParseError("Truncated chunk header", offset=offset)
    return chunks


def _extensible_subformat(raw: bytes, fmt_offset: int, fmt_size: int) -> int:
    """Read the format code carried in a WAVE_FORMAT_EXTENSIBLE sub-format GUID."""
    if fmt_size < 40 or fmt_offset + 40 > len(raw):
        raise WavParseError(f"Extensible 'fmt ' chunk too short ({fmt_size} bytes)", offset=fmt_offset)
    (subformat,) = struct.unpack_from("<H", raw, fmt_offset + 24)
    if raw[fmt_offset + 26:fmt_offset + 40] != SUBFORMAT_GUID_TAIL:
        raise UnsupportedFormatError("Unrecognized extensible sub-format GUID", field="sub_format")
    return subformat


def _check_format(chunks: Dict[bytes, Tuple[int, int]], raw: bytes) -> int:
    """Validate the fmt chunk; returns the sample rate."""
    if b"fmt " not in chunks:
        raise WavParseError("Missing 'fmt ' chunk", offset=len(raw))
    if b"data" not in chunks:
        raise WavParseError("Missing 'data' chunk", offset=len(raw))

    fmt_offset, fmt_size = chunks[b"fmt "]
    if fmt_size < 16 or fmt_offset + 16 > len(raw):
        raise WavParseError(f"'fmt ' chunk too short ({fmt_size} bytes)", offset=fmt_offset)
    audio_format, channels, sample_rate, _, _, bits = struct.unpack_from("<HHIIHH", raw, fmt_offset)
    if audio_format == WAVE_FORMAT_EXTENSIBLE:
        audio_format = _extensible_subformat(raw, fmt_offset, fmt_size)

    if audio_format != WAVE_FORMAT_PCM:
        raise UnsupportedFormatError(f"Only PCM is supported, audio_format={audio_format}",
                                     field="audio_format")
    if channels != 1:
        raise UnsupportedFormatError(f"Only mono is supported, num_channels={channels}",
                                     field="num_channels")
    if bits != 16:
        raise UnsupportedFormatError(f"Only 16-bit samples are supported, bits_per_sample={bits}",
                                     field="bits_per_sample")
    if sample_rate == 0:
        raise WavParseError("Sample rate is zero", offset=fmt_offset + 4)

    data_offset, data_size = chunks[b"data"]
    if data_offset + data_size > len(raw):
        raise WavParseError(
            f"'data' chunk declares {data_size} bytes, only {len(raw) - data_offset} present",
            offset=data_offset - 4,
        )
    return sample_rate


def read_wav(path: PathLike) -> Waveform:
    """
    Read a 16-bit PCM mono WAV file.

    Args:
        path: File to read

    Returns:
        Waveform with samples divided by 32768 and the header's sample rate

    Raises:
        FileNotFoundError: If the file does not exist
        WavParseError: If the RIFF structure is malformed or the decoder rejects the header
        UnsupportedFormatError: If the file is not 16-bit PCM mono
    """
    raw = Path(path).read_bytes()
    sample_rate = _check_format(_walk_chunks(raw), raw)

    try:
        rate, data = wavfile.read(io.BytesIO(raw))
    except ValueError as e:
        raise WavParseError(f"Cannot decode {path}: {e}", offset=12)
    samples = np.asarray(data, dtype=np.float64) / PCM_SCALE
    logger.debug(f"Read {path}: {len(samples)} samples at {rate} Hz")
    return Waveform(samples=samples, sample_rate_hz=sample_rate)


def quantize(samples: np.ndarray) -> np.ndarray:
    """round(s * 32768) saturated to the int16 range."""
    scaled = np.round(np.asarray(samples, dtype=np.float64) * PCM_SCALE)
    return np.clip(scaled, -32768, 32767).astype(np.int16)


def write_wav(path: PathLike, signal: Waveform) -> None:
    """
    Write a waveform as 16-bit PCM mono, saturating out-of-range samples.

    Raises:
        OSError: If the path cannot be written
    """
    wavfile.write(str(path), signal.sample_rate_hz, quantize(signal.samples))
    logger.debug(f"Wrote {path}: {len(signal)} samples at {signal.sample_rate_hz} Hz")
