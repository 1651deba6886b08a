"""
Entry point for running dftree as a module: python -m dftree
"""

from dftree.cli.commands import app

if __name__ == "__main__":
    app()
