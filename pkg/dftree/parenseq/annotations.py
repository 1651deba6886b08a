"""Annotation slots carried by every sequence node."""

from abc import ABC, abstractmethod
from typing import TYPE_CHECKING, Any, Callable

from dftree.parenseq.summaries import (
    CLOSE_DEPTH,
    EMPTY_LCA,
    EMPTY_MOMENT,
    OPEN_LCA,
    LcaSummary,
    MomentSummary,
    Monoid,
    RcsSummary,
    RcSummary,
    concat_lca,
    concat_moment,
    concat_rc,
    concat_rcs,
    rc_identity,
    rcs_identity,
)

if TYPE_CHECKING:
    from dftree.parenseq.sequence import SeqNode

# A source maps the vertex payload of a node to the value it contributes.
Source = Callable[[Any], Any]


class Annotation(ABC):
    """
    Abstract base class for a fold slot.

    Every node stores ``lift(node)`` for itself and the ``concat``-fold of its
    structural subtree. Annotations are fixed when the sequence store is built.
    """

    def __init__(self, name: str):
        self.name = name

    @property
    @abstractmethod
    def identity(self) -> Any:
        """Fold of the empty range."""
        pass

    @abstractmethod
    def lift(self, node: "SeqNode") -> Any:
        """Value of the one-element range holding ``node``."""
        pass

    @abstractmethod
    def concat(self, a: Any, b: Any) -> Any:
        pass

    def fold(self, nodes) -> Any:
        acc = self.identity
        for node in nodes:
            acc = self.concat(acc, self.lift(node))
        return acc

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.name!r})"


class LcaAnnotation(Annotation):
    """Depth summary with the leftmost minimal-depth node."""

    def __init__(self, name: str = "lca"):
        super().__init__(name)

    @property
    def identity(self) -> LcaSummary:
        return EMPTY_LCA

    def lift(self, node: "SeqNode") -> LcaSummary:
        if node.is_open:
            return OPEN_LCA
        return LcaSummary(CLOSE_DEPTH, node)

    def concat(self, a: LcaSummary, b: LcaSummary) -> LcaSummary:
        return concat_lca(a, b)


class ItemAnnotation(Annotation):
    """Plain monoid fold of one value per node, chosen by node kind."""

    def __init__(self, name: str, monoid: Monoid, on_open: Source, on_close: Source):
        super().__init__(name)
        self.monoid = monoid
        self.on_open = on_open
        self.on_close = on_close

    @property
    def identity(self) -> Any:
        return self.monoid.identity

    def lift(self, node: "SeqNode") -> Any:
        if node.is_open:
            return self.on_open(node.vertex)
        return self.on_close(node.vertex)

    def concat(self, a: Any, b: Any) -> Any:
        return self.monoid.op(a, b)


class PathAnnotation(ItemAnnotation):
    """⊙-fold with val(v) on Open(v) and its inverse on Close(v).

    A prefix ending at Open(v) folds to the ⊙-combination of the root path of v.
    """

    def __init__(self, name: str, dot: Monoid, source: Source):
        if dot.inverse is None:
            raise ValueError(f"path combination {name!r} needs an invertible operation")
        inverse = dot.inverse
        super().__init__(name, dot, source, lambda vertex: inverse(source(vertex)))


class RcAnnotation(Annotation):
    """Reduce-children summary over ⊕."""

    def __init__(self, name: str, plus: Monoid, source: Source):
        super().__init__(name)
        self.plus = plus
        self.source = source
        self._identity = rc_identity(plus)
        self._close = RcSummary(-1, plus.identity, 0, None)

    @property
    def identity(self) -> RcSummary:
        return self._identity

    def lift(self, node: "SeqNode") -> RcSummary:
        if node.is_open:
            return RcSummary(0, self.plus.identity, 1, self.source(node.vertex))
        return self._close

    def concat(self, a: RcSummary, b: RcSummary) -> RcSummary:
        return concat_rc(a, b, self.plus)


class RcsAnnotation(Annotation):
    """Reduce-child-subtrees summary over ⊕ and ⊗. Close nodes carry no value."""

    def __init__(self, name: str, plus: Monoid, times: Monoid, source: Source):
        super().__init__(name)
        self.plus = plus
        self.times = times
        self.source = source
        self._identity = rcs_identity(plus, times)
        self._close = RcsSummary(
            -1, plus.identity, plus.identity, times.identity, plus.identity, 0
        )

    @property
    def identity(self) -> RcsSummary:
        return self._identity

    def lift(self, node: "SeqNode") -> RcsSummary:
        if node.is_open:
            e = self.plus.identity
            return RcsSummary(0, e, e, self.times.identity, self.source(node.vertex), 1)
        return self._close

    def concat(self, a: RcsSummary, b: RcsSummary) -> RcsSummary:
        return concat_rcs(a, b, self.plus, self.times)


class MomentAnnotation(Annotation):
    """Weighted depth moment: +w on Open, -w on Close."""

    def __init__(self, name: str, weight: Source):
        super().__init__(name)
        self.weight = weight

    @property
    def identity(self) -> MomentSummary:
        return EMPTY_MOMENT

    def lift(self, node: "SeqNode") -> MomentSummary:
        w = self.weight(node.vertex)
        if node.is_open:
            return MomentSummary(1, w, w)
        return MomentSummary(0, -w, 0)

    def concat(self, a: MomentSummary, b: MomentSummary) -> MomentSummary:
        return concat_moment(a, b)
