"""Shared synthetic signals for the test suites."""
import numpy as np
import pytest
from scipy import fft as sp_fft

from src.models.signal import Waveform


SAMPLE_RATE = 8000


def voiced_signal(duration_s: float = 1.5, lead_in_s: float = 0.25, f0_hz: float = 200.0,
                  n_harmonics: int = 15, sample_rate_hz: int = SAMPLE_RATE) -> Waveform:
    """Harmonic series with 1/h amplitudes after an exactly silent lead-in."""
    n = int(round(duration_s * sample_rate_hz))
    lead = int(round(lead_in_s * sample_rate_hz))
    t = np.arange(n - lead) / sample_rate_hz
    voiced = sum(np.sin(2.0 * np.pi * h * f0_hz * t) / h for h in range(1, n_harmonics + 1))
    samples = np.concatenate([np.zeros(lead), 0.2 * voiced])
    return Waveform(samples=samples, sample_rate_hz=sample_rate_hz)


def white_noise(n_samples: int, seed: int, scale: float = 0.1,
                sample_rate_hz: int = SAMPLE_RATE) -> Waveform:
    rng = np.random.default_rng(seed)
    return Waveform(samples=scale * rng.standard_normal(n_samples), sample_rate_hz=sample_rate_hz)


def tone(freq_hz: float, n_samples: int, amplitude: float = 0.5,
         sample_rate_hz: int = SAMPLE_RATE) -> Waveform:
    t = np.arange(n_samples) / sample_rate_hz
    return Waveform(samples=amplitude * np.sin(2.0 * np.pi * freq_hz * t), sample_rate_hz=sample_rate_hz)


def band_energy_db(signal: Waveform, lo_hz: float, hi_hz: float, start: int, stop: int) -> float:
    """Energy of samples[start:stop] between lo_hz and hi_hz, in dB."""
    segment = signal.samples[start:stop]
    spectrum = sp_fft.rfft(segment)
    freqs = sp_fft.rfftfreq(len(segment), d=1.0 / signal.sample_rate_hz)
    in_band = (freqs >= lo_hz) & (freqs <= hi_hz)
    return 10.0 * np.log10(np.sum(np.abs(spectrum[in_band]) ** 2))


@pytest.fixture
def rng():
    return np.random.default_rng(1234)


@pytest.fixture
def voiced():
    return voiced_signal()


@pytest.fixture
def noise():
    return white_noise(16000, seed=7)
