"""Exception hierarchy for the NSSP enhancement toolkit.

Every error carries the process exit code the CLI reports for it.
"""
from typing import Optional


class NsspError(Exception):
    """Base class for all toolkit errors."""
    exit_code = 1


class InvalidArgumentError(NsspError, ValueError):
    """Raised when an operation receives arguments outside its contract."""
    exit_code = 4


class DegenerateInputError(NsspError, ValueError):
    """Raised when an input has no usable signal (zero power, no frames)."""
    exit_code = 4


class TooShortInputError(DegenerateInputError):
    """Raised when an utterance is too short to initialize the noise tracker."""
    exit_code = 4


class ConfigurationError(NsspError, ValueError):
    """Raised for unknown configuration keys or violated invariants."""
    exit_code = 2

    def __init__(self, message: str, key: Optional[str] = None):
        super().__init__(message)
        self.key = key


class UnsupportedFormatError(NsspError):
    """Raised when a WAV file is valid RIFF but not 16-bit PCM mono."""
    exit_code = 3

    def __init__(self, message: str, field: str):
        super().__init__(message)
        self.field = field


class WavParseError(NsspError):
    """Raised when a WAV header cannot be parsed."""
    exit_code = 3

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at byte offset {offset})")
        self.offset = offset


class ManifestError(NsspError):
    """Raised when a batch manifest cannot be read or parsed."""
    exit_code = 3

    def __init__(self, message: str, line_number: Optional[int] = None):
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)
        self.line_number = line_number
