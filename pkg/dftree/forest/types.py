"""Forest data types."""

from dataclasses import dataclass, field
from typing import Any, Hashable

from dftree.parenseq.sequence import SeqNode


@dataclass(slots=True)
class DeltaTriple:
    """Lazy increments of one tracked quantity.

    effective(v) = d_self(v) + Σ d_up over subtree(v) + Σ d_down over path(v → root)
    """
    d_up: Any = 0
    d_down: Any = 0
    d_self: Any = 0


@dataclass(eq=False, slots=True)
class VertexRecord:
    """Everything the forest stores for one vertex."""
    key: Hashable
    val: Any = 0
    weight: Any = 1
    open: SeqNode | None = field(default=None, repr=False)
    close: SeqNode | None = field(default=None, repr=False)
    deltas: list[DeltaTriple] = field(default_factory=list, repr=False)


@dataclass
class RootedTree:
    """Adjacency form of one rooted tree, used by import and export."""
    root: Hashable
    parent: dict[Hashable, Hashable] = field(default_factory=dict)
    children: dict[Hashable, list[Hashable]] = field(default_factory=dict)
    vals: dict[Hashable, Any] = field(default_factory=dict)
    weights: dict[Hashable, Any] = field(default_factory=dict)

    def vertices(self) -> list[Hashable]:
        """Vertices in depth first preorder."""
        order = []
        stack = [self.root]
        while stack:
            v = stack.pop()
            order.append(v)
            stack.extend(reversed(self.children.get(v, [])))
        return order

    def __len__(self) -> int:
        return len(self.vertices())
