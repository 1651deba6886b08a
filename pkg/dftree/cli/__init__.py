"""CLI module for dftree."""
