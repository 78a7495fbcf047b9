"""
Enhancer configuration files.

A configuration file is a flat mapping of keys to scalars, written either
as YAML (`key: value`) or as `key = value` lines; `#` starts a comment.
Keys not present keep their defaults; unknown keys are rejected.
"""
import logging
import re
from pathlib import Path
from typing import Any, Dict, Mapping, Optional, Union

import yaml

from ..errors import ConfigurationError, InvalidArgumentError
from ..models.config import EnhancerConfig, MetricsParams
from ..models.noise import NoiseTrackerConfig
from ..models.params import NuScope, PhaseParams, PsiMode, SubtractionParams
from ..models.signal import FrameLayout, WindowKind


logger = logging.getLogger(__name__)

DEFAULT_CONFIG_PATH = Path(__file__).resolve().parents[2] / "config" / "enhancer_defaults.yaml"

# Key order is the serialized order.
CONFIG_SCHEMA: Dict[str, type] = {
    "sample_rate_hz": int,
    "step1_frame_len": int,
    "step1_hop": int,
    "step1_fft_len": int,
    "step1_window": str,
    "beta_floor": float,
    "forgetting": float,
    "mu": float,
    "n_init_silence": int,
    "low_band_lo_hz": float,
    "low_band_hi_hz": float,
    "vad_threshold_db": float,
    "alpha_min": float,
    "alpha_max": float,
    "step2_frame_len": int,
    "step2_hop": int,
    "step2_fft_len": int,
    "step2_window": str,
    "psi_mode": str,
    "psi_max": float,
    "nu_floor": float,
    "nu_scope": str,
    "metrics_frame_len": int,
    "metrics_hop": int,
    "segsnr_min_db": float,
    "segsnr_max_db": float,
    "overall_snr_max_db": float,
    "spectrogram_db_floor": float,
}

_ASSIGNMENT = re.compile(r"^\s*([A-Za-z_]\w*)\s*=(.*)$")


def config_to_dict(config: EnhancerConfig) -> Dict[str, Any]:
    """Flatten a configuration into the file keys, in schema order."""
    step1, step2, metrics = config.step1, config.step2, config.metrics
    layout1, layout2, tracker = step1.layout1, step2.layout2, step1.tracker
    return {
        "sample_rate_hz": config.sample_rate_hz,
        "step1_frame_len": layout1.frame_len,
        "step1_hop": layout1.hop,
        "step1_fft_len": layout1.fft_len,
        "step1_window": layout1.window_kind.value,
        "beta_floor": step1.beta_floor,
        "forgetting": tracker.forgetting,
        "mu": tracker.mu,
        "n_init_silence": tracker.n_init_silence,
        "low_band_lo_hz": float(tracker.low_band_hz[0]),
        "low_band_hi_hz": float(tracker.low_band_hz[1]),
        "vad_threshold_db": tracker.vad_threshold_db,
        "alpha_min": tracker.alpha_min,
        "alpha_max": tracker.alpha_max,
        "step2_frame_len": layout2.frame_len,
        "step2_hop": layout2.hop,
        "step2_fft_len": layout2.fft_len,
        "step2_window": layout2.window_kind.value,
        "psi_mode": str(step2.psi_mode),
        "psi_max": step2.psi_max,
        "nu_floor": step2.nu_floor,
        "nu_scope": step2.nu_scope.value,
        "metrics_frame_len": metrics.frame_len,
        "metrics_hop": metrics.hop,
        "segsnr_min_db": metrics.segsnr_min_db,
        "segsnr_max_db": metrics.segsnr_max_db,
        "overall_snr_max_db": metrics.overall_snr_max_db,
        "spectrogram_db_floor": metrics.spectrogram_db_floor,
    }


def dump_config(config: EnhancerConfig) -> str:
    """Serialize a configuration as YAML in schema order."""
    return yaml.safe_dump(config_to_dict(config), sort_keys=False, default_flow_style=False)


def _coerce(key: str, value: Any) -> Any:
    expected = CONFIG_SCHEMA[key]
    if isinstance(value, bool) or value is None:
        raise ConfigurationError(f"{key}: expected {expected.__name__}, got {value!r}", key=key)
    try:
        if expected is int:
            if isinstance(value, float) and not value.is_integer():
                raise ValueError(value)
            return int(value) if not isinstance(value, str) else int(value.strip())
        if expected is float:
            return float(value)
        return str(value)
    except ValueError:
        raise ConfigurationError(f"{key}: expected {expected.__name__}, got {value!r}", key=key)


def _failing_layout_key(prefix: str, frame_len: int, hop: int, fft_len: int) -> str:
    """Name the layout key that breaks 0 < hop <= frame_len <= fft_len, fft_len even."""
    if frame_len <= 0:
        return f"{prefix}_frame_len"
    if not 0 < hop <= frame_len:
        return f"{prefix}_hop"
    return f"{prefix}_fft_len"


def _layout(flat: Mapping[str, Any], prefix: str) -> FrameLayout:
    window_key = f"{prefix}_window"
    try:
        window_kind = WindowKind.parse(flat[window_key])
    except InvalidArgumentError as e:
        raise ConfigurationError(f"{prefix} layout: {e}", key=window_key)

    frame_len, hop, fft_len = (flat[f"{prefix}_{name}"] for name in ("frame_len", "hop", "fft_len"))
    try:
        return FrameLayout(frame_len=frame_len, hop=hop, fft_len=fft_len, window_kind=window_kind)
    except InvalidArgumentError as e:
        raise ConfigurationError(
            f"{prefix} layout: {e}", key=_failing_layout_key(prefix, frame_len, hop, fft_len)
        )


def config_from_dict(flat: Mapping[str, Any]) -> EnhancerConfig:
    """
    Build and validate a configuration from a flat mapping.

    Missing keys take their defaults.

    Raises:
        ConfigurationError: On unknown keys, mistyped values or violated invariants
    """
    unknown = sorted(set(flat) - set(CONFIG_SCHEMA))
    if unknown:
        raise ConfigurationError(f"Unknown configuration key(s): {', '.join(unknown)}", key=unknown[0])

    merged = config_to_dict(EnhancerConfig())
    merged.update({key: _coerce(key, value) for key, value in flat.items()})

    try:
        psi_mode = PsiMode.parse(merged["psi_mode"])
    except InvalidArgumentError as e:
        raise ConfigurationError(str(e), key="psi_mode")
    try:
        nu_scope = NuScope.parse(merged["nu_scope"])
    except InvalidArgumentError as e:
        raise ConfigurationError(str(e), key="nu_scope")

    tracker = NoiseTrackerConfig(
        n_init_silence=merged["n_init_silence"],
        forgetting=merged["forgetting"],
        mu=merged["mu"],
        low_band_hz=(merged["low_band_lo_hz"], merged["low_band_hi_hz"]),
        vad_threshold_db=merged["vad_threshold_db"],
        alpha_min=merged["alpha_min"],
        alpha_max=merged["alpha_max"],
    )
    config = EnhancerConfig(
        sample_rate_hz=merged["sample_rate_hz"],
        step1=SubtractionParams(
            beta_floor=merged["beta_floor"],
            tracker=tracker,
            layout1=_layout(merged, "step1"),
        ),
        step2=PhaseParams(
            layout2=_layout(merged, "step2"),
            psi_max=merged["psi_max"],
            nu_floor=merged["nu_floor"],
            psi_mode=psi_mode,
            nu_scope=nu_scope,
        ),
        metrics=MetricsParams(
            frame_len=merged["metrics_frame_len"],
            hop=merged["metrics_hop"],
            segsnr_min_db=merged["segsnr_min_db"],
            segsnr_max_db=merged["segsnr_max_db"],
            overall_snr_max_db=merged["overall_snr_max_db"],
            spectrogram_db_floor=merged["spectrogram_db_floor"],
        ),
    )
    return config.validate()


def parse_config_text(text: str) -> Dict[str, Any]:
    """
    Parse configuration text into a flat mapping.

    `key = value` lines are rewritten to YAML before yaml.safe_load runs.

    Raises:
        ConfigurationError: If the text is not a flat mapping
    """
    lines = []
    for line in text.splitlines():
        match = _ASSIGNMENT.match(line)
        if match:
            value = match.group(2).split("#", 1)[0].strip()
            line = f"{match.group(1)}: {value}"
        lines.append(line)

    try:
        data = yaml.safe_load("\n".join(lines))
    except yaml.YAMLError as e:
        raise ConfigurationError(f"Cannot parse configuration: {e}")
    if data is None:
        return {}
    if not isinstance(data, dict):
        raise ConfigurationError(f"Configuration must be a mapping, got {type(data).__name__}")
    nested = [key for key, value in data.items() if isinstance(value, (dict, list))]
    if nested:
        raise ConfigurationError(f"Configuration values must be scalars: {', '.join(map(str, nested))}",
                                 key=str(nested[0]))
    return {str(key): value for key, value in data.items()}


def load_config(path: Optional[Union[str, Path]] = None,
                overrides: Optional[Mapping[str, Any]] = None) -> EnhancerConfig:
    """
    Load a configuration file over the built-in defaults.

    Args:
        path: Configuration file; None uses the defaults
        overrides: Extra key/value pairs applied after the file (e.g. from flags)

    Returns:
        Validated EnhancerConfig

    Raises:
        FileNotFoundError: If path does not exist
        ConfigurationError: On unknown keys or violated invariants
    """
    flat: Dict[str, Any] = {}
    if path is not None:
        config_path = Path(path)
        if not config_path.exists():
            raise FileNotFoundError(f"Configuration file not found: {config_path}")
        flat.update(parse_config_text(config_path.read_text(encoding="utf-8")))
        logger.debug(f"Loaded {len(flat)} configuration keys from {config_path}")
    if overrides:
        flat.update(overrides)
    return config_from_dict(flat)
