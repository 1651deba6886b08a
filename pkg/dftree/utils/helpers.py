"""Utility functions for dftree."""

from pathlib import Path


def ensure_dir(path: Path) -> Path:
    """Ensure a directory exists, creating it if necessary."""
    path.mkdir(parents=True, exist_ok=True)
    return path


def get_data_path() -> Path:
    """Get the dftree data directory (~/.dftree)."""
    return Path.home() / ".dftree"


def write_text(path: Path, text: str) -> Path:
    """Write ``text`` to ``path``, creating parent directories."""
    ensure_dir(path.parent)
    path.write_text(text, encoding="utf-8")
    return path
