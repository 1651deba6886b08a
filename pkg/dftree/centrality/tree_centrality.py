"""Betweenness and closeness centrality on dynamic weighted forests."""

import math
from fractions import Fraction
from typing import Any, Hashable, Iterable, Sequence

from loguru import logger

from dftree.centrality.pairs import PAIR_MERGE, PAIR_SUM, unit_pair
from dftree.config.schema import ForestConfig
from dftree.errors import (
    AuditError,
    CycleError,
    ForestLockedError,
    NotRootError,
    UndefinedValueError,
    VertexNotFoundError,
)
from dftree.forest.aggregations import (
    MOMENT,
    STANDARD_AGGREGATIONS,
    SUBTREE_SIZE,
    WEIGHTED_DEPTH,
    Aggregation,
    PathCombination,
    SubtreeMoment,
    SubtreeReduction,
)
from dftree.forest.algebra import SUM, by_weight, unit
from dftree.forest.forest import Forest

SIZE_SQUARE = "size_square"
LCA_MASS = "lca_mass"

CENTRALITY_AGGREGATIONS: tuple[Aggregation, ...] = (
    SubtreeReduction(SUBTREE_SIZE, SUM, SUM, unit),
    SubtreeReduction(SIZE_SQUARE, PAIR_MERGE, PAIR_SUM, unit_pair),
    PathCombination(WEIGHTED_DEPTH, SUM, by_weight),
    SubtreeMoment(MOMENT),
)


class TreeCentrality:
    """
    Owner of a forest that keeps every vertex's farness exact under structural change.

    farness(x) = n·D(x) + ΣD − 2·L(x), where D is the weighted depth, n the tree
    size, ΣD the sum of weighted depths and L(x) the sum of weight·size over the
    non-root vertices on x's root path. L is a tracked quantity kept current by
    the ``cc_*`` wrappers; the forest is locked against every other mutation.

    Finite float weights are stored as exact ``Fraction``s, so the lazy updates
    to L cancel exactly; distance answers are floats again on the way out.
    """

    def __init__(
        self,
        aggregations: Iterable[Aggregation] = STANDARD_AGGREGATIONS,
        tracked: Sequence[str] = ("val",),
        config: ForestConfig | None = None,
    ):
        merged = {a.name: a for a in (*aggregations, *CENTRALITY_AGGREGATIONS)}
        self.forest = Forest(merged.values(), tracked=(*tracked, LCA_MASS), config=config)
        self.forest.lock(self)
        self._inexact = False

    def _exact(self, w: Any) -> Any:
        if isinstance(w, float) and math.isfinite(w):
            self._inexact = True
            return Fraction(w)
        return w

    def _out(self, x: Any) -> Any:
        return float(x) if self._inexact and isinstance(x, Fraction) else x

    def _mass(self, v: Hashable) -> Any:
        return self.forest.get_effective_val(v, LCA_MASS)

    def _spread(self, v: Hashable, delta: Any) -> None:
        if delta:
            self.forest.add_to_subtree(v, delta, LCA_MASS)

    # =======================================================================
    # Mutations
    # =======================================================================

    def add_vertex(self, key: Hashable, val: Any = 0, weight: Any = None) -> Hashable:
        if weight is None:
            weight = self.forest.config.default_weight
        with self.forest.unlocked(self):
            return self.forest.add_vertex(key, val, self._exact(weight))

    def cc_link(self, u: Hashable, v: Hashable, w: Any = None) -> None:
        """Link root ``v`` under ``u`` with edge weight ``w``."""
        f = self.forest
        for x in (u, v):
            if x not in f:
                raise VertexNotFoundError(x)
        w = self._exact(f.config.default_weight if w is None else w)
        if u == v:
            raise CycleError(f"cannot link {u!r} to itself")
        if f.parent(v) is not None:
            raise NotRootError(f"{v!r} is not the root of its tree")
        if f.root(u) == v:
            raise CycleError(f"{u!r} and {v!r} are already in the same tree")

        size = f.subtree_size(v)
        depth = f.weighted_depth(u)
        mass = self._mass(u)
        with f.unlocked(self):
            for a in f.path(u)[:-1]:
                self._spread(a, size * f.get_weight(a))
            self._spread(v, w * size + mass + size * depth)
            f.link(u, v, w)

    def cc_cut(self, v: Hashable) -> None:
        f = self.forest
        p = f.parent(v)
        if p is None:
            return
        size = f.subtree_size(v)
        mass = self._mass(p)
        above = f.path(p)[:-1]
        with f.unlocked(self):
            self._spread(v, -(f.get_weight(v) * size + mass))
            f.cut(v)
            for a in above:
                self._spread(a, -size * f.get_weight(a))

    def cc_condense(self, v: Hashable) -> None:
        f = self.forest
        p = f.parent(v)
        with f.unlocked(self):
            if p is not None:
                self._spread(v, -f.get_weight(v) * f.subtree_size(v))
                for a in f.path(p)[:-1]:
                    self._spread(a, -f.get_weight(a))
            else:
                for c in f.list_children(v):
                    self._spread(c, -f.get_weight(c) * f.subtree_size(c))
            f.condense(v)

    def cc_erase(self, v: Hashable) -> None:
        self.cc_cut(v)
        self.cc_condense(v)

    def cc_evert(self, v: Hashable) -> None:
        """Evert through cc_cut/cc_link so that distances stay exact."""
        f = self.forest
        path = f.path(v)
        if len(path) == 1:
            return
        weights = [f.get_weight(x) for x in path[:-1]]
        for x in path[:-1]:
            self.cc_cut(x)
        for i in range(len(path) - 2, -1, -1):
            self.cc_link(path[i], path[i + 1], weights[i])
        logger.debug(f"cc_evert {v!r} over depth {len(path) - 1}")

    # Lazy values of the other tracked quantities pass straight through.

    def _check_quantity(self, quantity: str) -> None:
        if quantity == LCA_MASS:
            raise ForestLockedError(f"{LCA_MASS} is maintained by the centrality layer")

    def set_val(self, v: Hashable, x: Any) -> None:
        with self.forest.unlocked(self):
            self.forest.set_val(v, x)

    def change_val(self, v: Hashable, x: Any, quantity: str = "val") -> None:
        self._check_quantity(quantity)
        with self.forest.unlocked(self):
            self.forest.change_val(v, x, quantity)

    def add_to_path(self, v: Hashable, delta: Any, quantity: str = "val") -> None:
        self._check_quantity(quantity)
        with self.forest.unlocked(self):
            self.forest.add_to_path(v, delta, quantity)

    def add_to_subtree(self, v: Hashable, delta: Any, quantity: str = "val") -> None:
        self._check_quantity(quantity)
        with self.forest.unlocked(self):
            self.forest.add_to_subtree(v, delta, quantity)

    # =======================================================================
    # Queries
    # =======================================================================

    def subtree_size(self, v: Hashable) -> int:
        return self.forest.subtree_size(v)

    def betweenness(self, v: Hashable) -> int:
        """Unordered pairs (s, t), both different from ``v``, whose path passes through ``v``."""
        f = self.forest
        pair = f.reduce_child_subtrees(v, SIZE_SQUARE)
        above = f.subtree_size(f.root(v)) - f.subtree_size(v)
        cross = pair.s * pair.s - pair.q
        if f.config.audit_every and cross % 2:
            raise AuditError(f"odd cross-pair count {cross} below {v!r}")
        return above * pair.s + cross // 2

    def _farness(self, v: Hashable) -> Any:
        f = self.forest
        root = f.root(v)
        n = f.subtree_size(root)
        return n * f.weighted_depth(v) + f.subtree_moment(root) - 2 * self._mass(v)

    def farness(self, v: Hashable) -> Any:
        """Sum of weighted distances from ``v`` to every vertex of its tree."""
        return self._out(self._farness(v))

    def closeness(self, v: Hashable) -> float:
        far = self._farness(v)
        if far == 0:
            raise UndefinedValueError(f"closeness of {v!r} is undefined: farness is 0")
        return float(1 / far)

    def down_dists(self, v: Hashable) -> Any:
        """Sum of distances from ``v`` into its own subtree."""
        return self._out(self.forest.subtree_moment(v))

    def up_dists(self, v: Hashable) -> Any:
        """Sum of distances from ``v`` to the vertices outside its subtree."""
        return self._out(self._farness(v) - self.forest.subtree_moment(v))

    def farness_all(self) -> dict[Hashable, Any]:
        return {v: self.farness(v) for v in self.forest.vertices()}
