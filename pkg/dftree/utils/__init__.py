"""Utility functions for dftree."""

from dftree.utils.helpers import ensure_dir, get_data_path, write_text

__all__ = ["ensure_dir", "get_data_path", "write_text"]
