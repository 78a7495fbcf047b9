"""Utility modules for the NSSP enhancement toolkit."""

from .config_loader import (
    CONFIG_SCHEMA,
    DEFAULT_CONFIG_PATH,
    config_from_dict,
    config_to_dict,
    dump_config,
    load_config,
    parse_config_text,
)

__all__ = [
    'CONFIG_SCHEMA',
    'DEFAULT_CONFIG_PATH',
    'config_from_dict',
    'config_to_dict',
    'dump_config',
    'load_config',
    'parse_config_text',
]
