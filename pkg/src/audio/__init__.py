"""Audio file I/O."""

from .wav import read_wav, write_wav, quantize

__all__ = ["read_wav", "write_wav", "quantize"]
