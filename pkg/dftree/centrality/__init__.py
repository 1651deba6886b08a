"""Betweenness and closeness centrality on dynamic trees."""

from dftree.centrality.pairs import SizeSquarePair
from dftree.centrality.tree_centrality import (
    CENTRALITY_AGGREGATIONS,
    LCA_MASS,
    SIZE_SQUARE,
    TreeCentrality,
)

__all__ = ["TreeCentrality", "SizeSquarePair", "CENTRALITY_AGGREGATIONS", "LCA_MASS", "SIZE_SQUARE"]
