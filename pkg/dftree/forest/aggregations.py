"""Aggregation registry for fixed-at-construction forest reductions."""

from dataclasses import dataclass
from typing import Iterable, Iterator

from dftree.errors import AggregationNotRegisteredError
from dftree.forest.algebra import MAX, SUM, by_val, by_weight, unit
from dftree.parenseq.annotations import (
    Annotation,
    MomentAnnotation,
    PathAnnotation,
    RcAnnotation,
    RcsAnnotation,
    Source,
)
from dftree.parenseq.summaries import Monoid


@dataclass(frozen=True)
class ChildReduction:
    """⊕ over the values of a vertex's children."""
    name: str
    plus: Monoid
    source: Source = by_val

    def annotation(self) -> Annotation:
        return RcAnnotation(self.name, self.plus, self.source)


@dataclass(frozen=True)
class SubtreeReduction:
    """⊕ within each child subtree, ⊗ across the child subtrees."""
    name: str
    plus: Monoid
    times: Monoid
    source: Source = by_val

    def annotation(self) -> Annotation:
        return RcsAnnotation(self.name, self.plus, self.times, self.source)


@dataclass(frozen=True)
class PathCombination:
    """Invertible ⊙ over the path from a vertex to its root."""
    name: str
    dot: Monoid
    source: Source = by_val

    def annotation(self) -> Annotation:
        return PathAnnotation(self.name, self.dot, self.source)


@dataclass(frozen=True)
class SubtreeMoment:
    """Sum of weighted depths inside a subtree."""
    name: str
    weight: Source = by_weight

    def annotation(self) -> Annotation:
        return MomentAnnotation(self.name, self.weight)


Aggregation = ChildReduction | SubtreeReduction | PathCombination | SubtreeMoment

# Names used by the forest's derived queries.
DEGREE = "degree"
CHILDREN_SUM = "children_sum"
CHILDREN_MAX = "children_max"
SUBTREE_SUM = "subtree_sum"
SUBTREE_SIZE = "subtree_size"
SUBTREE_MAX = "subtree_max"
MAXSUM_CHILD = "maxsum_child"
DEPTH = "depth"
PATH_VAL = "path_val"
WEIGHTED_DEPTH = "weighted_depth"
MOMENT = "moment"

DEGREE_AGGREGATION = ChildReduction(DEGREE, SUM, unit)

STANDARD_AGGREGATIONS: tuple[Aggregation, ...] = (
    ChildReduction(CHILDREN_SUM, SUM),
    ChildReduction(CHILDREN_MAX, MAX),
    SubtreeReduction(SUBTREE_SUM, SUM, SUM),
    SubtreeReduction(SUBTREE_SIZE, SUM, SUM, unit),
    SubtreeReduction(SUBTREE_MAX, MAX, MAX),
    SubtreeReduction(MAXSUM_CHILD, SUM, MAX),
    PathCombination(DEPTH, SUM, unit),
    PathCombination(PATH_VAL, SUM),
    PathCombination(WEIGHTED_DEPTH, SUM, by_weight),
    SubtreeMoment(MOMENT),
)


class AggregationRegistry:
    """
    Registry of the aggregations a forest maintains.

    The forest reads it once at construction; later registrations have no effect
    on an existing forest.
    """

    def __init__(self, aggregations: Iterable[Aggregation] = ()):
        self._aggregations: dict[str, Aggregation] = {}
        for aggregation in aggregations:
            self.register(aggregation)

    def register(self, aggregation: Aggregation) -> None:
        """Register an aggregation; a same-named one is replaced."""
        self._aggregations[aggregation.name] = aggregation

    def get(self, name: str) -> Aggregation | None:
        return self._aggregations.get(name)

    def require(self, name: str, kind: type | tuple[type, ...]) -> Aggregation:
        """Get an aggregation of the given kind or raise."""
        aggregation = self._aggregations.get(name)
        if aggregation is None or not isinstance(aggregation, kind):
            raise AggregationNotRegisteredError(name)
        return aggregation

    def has(self, name: str) -> bool:
        return name in self._aggregations

    def annotations(self) -> list[Annotation]:
        return [a.annotation() for a in self._aggregations.values()]

    @property
    def names(self) -> list[str]:
        return list(self._aggregations.keys())

    def __iter__(self) -> Iterator[Aggregation]:
        return iter(self._aggregations.values())

    def __len__(self) -> int:
        return len(self._aggregations)

    def __contains__(self, name: str) -> bool:
        return name in self._aggregations
