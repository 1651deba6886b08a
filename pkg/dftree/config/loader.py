"""Configuration loading utilities."""

import json
import re
from pathlib import Path
from typing import Any, Callable

from loguru import logger
from pydantic import ValidationError

from dftree.config.schema import Config
from dftree.utils.helpers import get_data_path, write_text

_CAMEL_BOUNDARY = re.compile(r"(?<!^)(?=[A-Z])")


def get_config_path() -> Path:
    """Get the default configuration file path."""
    return get_data_path() / "config.json"


def load_config(config_path: Path | None = None) -> Config:
    """
    Load configuration from a JSON file, with ``DFTREE_*`` variables on top.

    The file holds camelCase keys. A missing file gives the defaults; an
    unreadable or invalid one is logged and ignored.
    """
    path = config_path or get_config_path()
    if not path.exists():
        return Config()

    try:
        data = json.loads(path.read_text(encoding="utf-8"))
        if not isinstance(data, dict):
            raise ValueError("top level must be an object")
        return Config(**convert_keys(data))
    except (json.JSONDecodeError, ValidationError, ValueError) as e:
        logger.warning(f"Failed to load config from {path}: {e}; using defaults")
        return Config()


def save_config(config: Config, config_path: Path | None = None) -> Path:
    """Save configuration to file in camelCase form and return the path written."""
    path = config_path or get_config_path()
    data = convert_to_camel(config.model_dump())
    write_text(path, json.dumps(data, indent=2))
    logger.debug(f"config written to {path}")
    return path


def _rename_keys(data: Any, rename: Callable[[str], str]) -> Any:
    if isinstance(data, dict):
        return {rename(k): _rename_keys(v, rename) for k, v in data.items()}
    if isinstance(data, list):
        return [_rename_keys(item, rename) for item in data]
    return data


def convert_keys(data: Any) -> Any:
    """Convert camelCase keys to snake_case for Pydantic."""
    return _rename_keys(data, camel_to_snake)


def convert_to_camel(data: Any) -> Any:
    return _rename_keys(data, snake_to_camel)


def camel_to_snake(name: str) -> str:
    return _CAMEL_BOUNDARY.sub("_", name).lower()


def snake_to_camel(name: str) -> str:
    head, *rest = name.split("_")
    return head + "".join(part.title() for part in rest)
