"""Configuration module for dftree."""

from dftree.config.loader import get_config_path, load_config, save_config
from dftree.config.schema import BenchConfig, CliConfig, Config, ForestConfig

__all__ = [
    "Config",
    "ForestConfig",
    "BenchConfig",
    "CliConfig",
    "load_config",
    "save_config",
    "get_config_path",
]
