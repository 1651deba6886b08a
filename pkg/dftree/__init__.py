"""
dftree - dynamic forests on depth first tours
"""

__version__ = "0.1.0"
__logo__ = "\U0001f333"  # deciduous tree
