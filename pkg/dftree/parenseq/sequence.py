"""Splay-backed parenthesis sequences with handle-based split, merge and folds."""

from dataclasses import dataclass, field
from enum import IntEnum
from typing import Any, Iterator, Sequence

from dftree.errors import AuditError, InvalidHandleError, SequenceMismatchError
from dftree.parenseq.annotations import Annotation, ItemAnnotation, LcaAnnotation
from dftree.parenseq.summaries import EMPTY_DEPTH, Monoid, concat_depth

LCA_SLOT = 0
SIZE_SLOT = 1

_COUNT = Monoid("count", lambda a, b: a + b, 0)


class Kind(IntEnum):
    """Parenthesis kind; the value is the depth change it causes."""
    OPEN = 1
    CLOSE = -1


@dataclass(eq=False, slots=True)
class SeqNode:
    """One parenthesis of a depth first tour.

    ``items`` holds the node's own value per annotation slot, ``folds`` the
    fold over its structural subtree. Both lists are replaced, never mutated.
    """
    kind: Kind
    vertex: Any = field(default=None, repr=False)
    twin: "SeqNode | None" = field(default=None, repr=False)
    left: "SeqNode | None" = field(default=None, repr=False)
    right: "SeqNode | None" = field(default=None, repr=False)
    parent: "SeqNode | None" = field(default=None, repr=False)
    items: list = field(default_factory=list, repr=False)
    folds: list = field(default_factory=list, repr=False)
    alive: bool = True

    @property
    def is_open(self) -> bool:
        return self.kind is Kind.OPEN

    @property
    def is_close(self) -> bool:
        return self.kind is Kind.CLOSE


# A sequence is referred to by any node of it; the splay root after the last
# operation is the canonical one. None stands for the empty sequence.
SeqRef = SeqNode | None


class SequenceStore:
    """
    Owner of every parenthesis sequence of one forest.

    The annotation set is fixed at construction. Slot 0 is always the lca
    summary and slot 1 the node count; the caller's annotations follow.
    """

    def __init__(self, annotations: Sequence[Annotation] = ()):
        self.annotations: tuple[Annotation, ...] = (
            LcaAnnotation("lca"),
            ItemAnnotation("size", _COUNT, lambda _: 1, lambda _: 1),
            *annotations,
        )
        self._concats = [a.concat for a in self.annotations]
        self._slots = {a.name: i for i, a in enumerate(self.annotations)}
        if len(self._slots) != len(self.annotations):
            raise ValueError("annotation names must be unique")

    def slot(self, name: str) -> int:
        return self._slots[name]

    def identity(self, slot: int) -> Any:
        return self.annotations[slot].identity

    # -----------------------------------------------------------------------
    # Node creation
    # -----------------------------------------------------------------------

    def new_pair(self, vertex: Any) -> tuple[SeqNode, SeqNode]:
        """Create the Open/Close twins of a vertex, merged into the sequence "()"."""
        open_node = SeqNode(Kind.OPEN, vertex)
        close_node = SeqNode(Kind.CLOSE, vertex)
        open_node.twin = close_node
        close_node.twin = open_node
        self._lift(open_node)
        self._lift(close_node)
        open_node.right = close_node
        close_node.parent = open_node
        self._pull(open_node)
        return open_node, close_node

    def new_node(self, kind: Kind, vertex: Any) -> SeqNode:
        """Create a lone node. Its twin must be set before it is lifted."""
        return SeqNode(kind, vertex)

    def _lift(self, node: SeqNode) -> None:
        node.items = [a.lift(node) for a in self.annotations]
        node.folds = node.items

    def refresh(self, node: SeqNode) -> None:
        """Recompute the node's own values after its vertex payload changed."""
        self._check(node)
        self._splay(node)
        node.items = [a.lift(node) for a in self.annotations]
        self._pull(node)

    # -----------------------------------------------------------------------
    # Splay machinery
    # -----------------------------------------------------------------------

    def _pull(self, x: SeqNode) -> None:
        left, right = x.left, x.right
        if left is None:
            if right is None:
                x.folds = x.items
            else:
                x.folds = [c(i, r) for c, i, r in zip(self._concats, x.items, right.folds)]
        elif right is None:
            x.folds = [c(lf, i) for c, lf, i in zip(self._concats, left.folds, x.items)]
        else:
            x.folds = [
                c(c(lf, i), r)
                for c, lf, i, r in zip(self._concats, left.folds, x.items, right.folds)
            ]

    def _rotate(self, x: SeqNode) -> None:
        p = x.parent
        g = p.parent
        if p.left is x:
            p.left = x.right
            if x.right is not None:
                x.right.parent = p
            x.right = p
        else:
            p.right = x.left
            if x.left is not None:
                x.left.parent = p
            x.left = p
        p.parent = x
        x.parent = g
        if g is not None:
            if g.left is p:
                g.left = x
            else:
                g.right = x
        self._pull(p)

    def _splay(self, x: SeqNode) -> SeqNode:
        while x.parent is not None:
            p = x.parent
            g = p.parent
            if g is not None:
                if (g.left is p) == (p.left is x):
                    self._rotate(p)
                else:
                    self._rotate(x)
            self._rotate(x)
        self._pull(x)
        return x

    @staticmethod
    def _check(node: SeqNode) -> None:
        if not node.alive:
            raise InvalidHandleError(f"sequence node of {node.vertex!r} was erased")

    def _leftmost(self, root: SeqNode) -> SeqNode:
        x = root
        while x.left is not None:
            x = x.left
        return self._splay(x)

    def _rightmost(self, root: SeqNode) -> SeqNode:
        x = root
        while x.right is not None:
            x = x.right
        return self._splay(x)

    def _join(self, left: SeqRef, right: SeqRef) -> SeqRef:
        """Concatenate two splay roots (either may be None)."""
        if left is None:
            return right
        if right is None:
            return left
        last = self._rightmost(left)
        last.right = right
        right.parent = last
        self._pull(last)
        return last

    # -----------------------------------------------------------------------
    # Sequence operations
    # -----------------------------------------------------------------------

    def representative(self, node: SeqNode) -> SeqNode:
        """Current splay root of the node's sequence (valid until the next operation)."""
        self._check(node)
        return self._splay(node)

    def same_sequence(self, a: SeqNode, b: SeqNode) -> bool:
        self._check(a)
        self._check(b)
        if a is b:
            return True
        self._splay(a)
        self._splay(b)
        return a.parent is not None

    def seq_first(self, ref: SeqNode) -> SeqNode:
        self._check(ref)
        return self._leftmost(self._splay(ref))

    def seq_last(self, ref: SeqNode) -> SeqNode:
        self._check(ref)
        return self._rightmost(self._splay(ref))

    def successor(self, node: SeqNode) -> SeqNode | None:
        self._check(node)
        self._splay(node)
        if node.right is None:
            return None
        return self._leftmost(node.right)

    def predecessor(self, node: SeqNode) -> SeqNode | None:
        self._check(node)
        self._splay(node)
        if node.left is None:
            return None
        return self._rightmost(node.left)

    def rank(self, node: SeqNode) -> int:
        """Zero-based position of the node within its sequence."""
        self._check(node)
        self._splay(node)
        return 0 if node.left is None else node.left.folds[SIZE_SLOT]

    def length(self, ref: SeqNode) -> int:
        self._check(ref)
        return self._splay(ref).folds[SIZE_SLOT]

    def precedes(self, a: SeqNode, b: SeqNode) -> bool:
        """True iff ``a`` is at or before ``b`` in their common sequence."""
        if a is b:
            self._check(a)
            return True
        rank_a = self.rank(a)
        rank_b = self.rank(b)
        if a.parent is None:
            raise SequenceMismatchError("nodes belong to different sequences")
        return rank_a <= rank_b

    def split_before(self, node: SeqNode) -> tuple[SeqRef, SeqNode]:
        """Cut just before ``node``; returns (left part, right part starting at node)."""
        self._check(node)
        self._splay(node)
        left = node.left
        if left is not None:
            left.parent = None
            node.left = None
            self._pull(node)
        return left, node

    def split_after(self, node: SeqNode) -> tuple[SeqNode, SeqRef]:
        """Cut just after ``node``; returns (left part ending at node, right part)."""
        self._check(node)
        self._splay(node)
        right = node.right
        if right is not None:
            right.parent = None
            node.right = None
            self._pull(node)
        return node, right

    def merge(self, a: SeqRef, b: SeqRef) -> SeqRef:
        """Concatenate the sequences of ``a`` and ``b``; merging a sequence with itself is a no-op."""
        if a is None:
            return None if b is None else self.representative(b)
        if b is None:
            return self.representative(a)
        self._check(a)
        self._check(b)
        self._splay(b)
        last = self._rightmost(self._splay(a))
        if b is last or b.parent is not None:
            return last
        last.right = b
        b.parent = last
        self._pull(last)
        return last

    def concat(self, *parts: SeqRef) -> SeqRef:
        """Merge several parts left to right."""
        result: SeqRef = None
        for part in parts:
            result = self.merge(result, part)
        return result

    def erase(self, node: SeqNode) -> SeqRef:
        """Remove ``node`` from its sequence and invalidate it."""
        self._check(node)
        self._splay(node)
        left, right = node.left, node.right
        if left is not None:
            left.parent = None
        if right is not None:
            right.parent = None
        node.left = node.right = None
        node.alive = False
        return self._join(left, right)

    def range_folds(self, a: SeqNode, b: SeqNode) -> list:
        """All annotation folds over the closed range [a, b]."""
        if not self.precedes(a, b):
            raise ValueError("range start must not come after its end")
        left, _ = self.split_before(a)
        mid, right = self.split_after(b)
        folds = mid.folds
        self._join(self._join(left, mid), right)
        return folds

    def range_fold(self, a: SeqNode, b: SeqNode, slot: int) -> Any:
        return self.range_folds(a, b)[slot]

    def prefix_fold(self, node: SeqNode, slot: int) -> Any:
        """Fold from the start of the sequence up to and including ``node``."""
        self._check(node)
        self._splay(node)
        if node.right is None:
            return node.folds[slot]
        concat = self._concats[slot]
        left = node.left.folds[slot] if node.left is not None else self.identity(slot)
        return concat(left, node.items[slot])

    def suffix_fold(self, node: SeqNode, slot: int) -> Any:
        """Fold from ``node`` (inclusive) to the end of the sequence."""
        self._check(node)
        self._splay(node)
        concat = self._concats[slot]
        right = node.right.folds[slot] if node.right is not None else self.identity(slot)
        return concat(node.items[slot], right)

    def search_prefix_depth(self, start: SeqNode, k: int) -> SeqNode | None:
        """Leftmost node at or after ``start`` whose range from ``start`` dips to depth -k."""
        if k < 1:
            raise ValueError("k must be positive")
        left, root = self.split_before(start)
        acc = EMPTY_DEPTH
        x: SeqNode | None = root
        last = root
        found: SeqNode | None = None
        while x is not None:
            last = x
            if x.left is not None:
                candidate = concat_depth(acc, x.left.folds[LCA_SLOT].summary)
                if candidate.down <= -k:
                    x = x.left
                    continue
                acc = candidate
            candidate = concat_depth(acc, x.items[LCA_SLOT].summary)
            if candidate.down <= -k:
                found = x
                break
            acc = candidate
            x = x.right
        top = self._splay(found if found is not None else last)
        self._join(left, top)
        return found

    # -----------------------------------------------------------------------
    # Bulk operations
    # -----------------------------------------------------------------------

    def build(self, nodes: Sequence[SeqNode]) -> SeqRef:
        """Link lone nodes into one balanced sequence in order, folding from the leaves up."""
        for node in nodes:
            self._check(node)
            node.left = node.right = node.parent = None
            self._lift(node)

        def _build(lo: int, hi: int) -> SeqRef:
            if lo >= hi:
                return None
            mid = (lo + hi) // 2
            node = nodes[mid]
            node.left = _build(lo, mid)
            node.right = _build(mid + 1, hi)
            if node.left is not None:
                node.left.parent = node
            if node.right is not None:
                node.right.parent = node
            self._pull(node)
            return node

        return _build(0, len(nodes))

    def iter_nodes(self, ref: SeqNode) -> Iterator[SeqNode]:
        """In-order walk of the whole sequence containing ``ref``."""
        self._check(ref)
        root = self._splay(ref)
        stack: list[SeqNode] = []
        x: SeqNode | None = root
        while stack or x is not None:
            while x is not None:
                stack.append(x)
                x = x.left
            x = stack.pop()
            yield x
            x = x.right

    def audit(self, ref: SeqNode) -> int:
        """Check links, liveness and every fold of the sequence; returns its length."""
        self._check(ref)
        root = self._splay(ref)
        if root.parent is not None:
            raise AuditError("splay root has a parent")
        count = 0
        stack: list[tuple[SeqNode, bool]] = [(root, False)]
        while stack:
            node, expanded = stack.pop()
            if not node.alive:
                raise AuditError(f"dead node of {node.vertex!r} still linked")
            if expanded:
                expected = list(node.folds)
                items = [a.lift(node) for a in self.annotations]
                if items != node.items:
                    raise AuditError(f"stale item values on node of {node.vertex!r}")
                self._pull(node)
                if node.folds != expected:
                    raise AuditError(f"stale folds on node of {node.vertex!r}")
                count += 1
                continue
            stack.append((node, True))
            for child in (node.left, node.right):
                if child is not None:
                    if child.parent is not node:
                        raise AuditError(f"broken parent link under {node.vertex!r}")
                    stack.append((child, False))
        return count
