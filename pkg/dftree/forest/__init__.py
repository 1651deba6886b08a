"""Dynamic forests: link, cut, condense, evert and reductions in O(log n)."""

from dftree.forest.aggregations import (
    STANDARD_AGGREGATIONS,
    Aggregation,
    AggregationRegistry,
    ChildReduction,
    PathCombination,
    SubtreeMoment,
    SubtreeReduction,
)
from dftree.forest.algebra import MAX, MIN, SUM, by_val, by_weight, unit
from dftree.forest.forest import Forest
from dftree.forest.types import DeltaTriple, RootedTree, VertexRecord

__all__ = [
    "Forest",
    "Aggregation",
    "AggregationRegistry",
    "ChildReduction",
    "SubtreeReduction",
    "PathCombination",
    "SubtreeMoment",
    "STANDARD_AGGREGATIONS",
    "SUM",
    "MAX",
    "MIN",
    "by_val",
    "by_weight",
    "unit",
    "DeltaTriple",
    "RootedTree",
    "VertexRecord",
]
