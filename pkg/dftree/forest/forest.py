"""Dynamic forest on depth first tours."""

from contextlib import contextmanager
from dataclasses import fields, is_dataclass
from functools import wraps
from typing import Any, Callable, Hashable, Iterable, Iterator, Mapping, Sequence, TypeVar

from loguru import logger

from dftree.config.schema import ForestConfig
from dftree.errors import (
    AggregationNotRegisteredError,
    AuditError,
    CycleError,
    DifferentTreesError,
    DuplicateVertexError,
    ForestLockedError,
    InvalidTreeError,
    NotRootError,
    VertexNotFoundError,
)
from dftree.forest.aggregations import (
    DEGREE,
    DEGREE_AGGREGATION,
    DEPTH,
    MAXSUM_CHILD,
    MOMENT,
    PATH_VAL,
    STANDARD_AGGREGATIONS,
    SUBTREE_MAX,
    SUBTREE_SIZE,
    SUBTREE_SUM,
    WEIGHTED_DEPTH,
    Aggregation,
    AggregationRegistry,
    ChildReduction,
    PathCombination,
    SubtreeMoment,
    SubtreeReduction,
)
from dftree.forest.algebra import SUM
from dftree.forest.types import DeltaTriple, RootedTree, VertexRecord
from dftree.parenseq.annotations import ItemAnnotation
from dftree.parenseq.sequence import LCA_SLOT, Kind, SeqNode, SequenceStore
from dftree.parenseq.summaries import EMPTY_DEPTH

INT64_MIN = -(2**63)
INT64_MAX = 2**63 - 1

F = TypeVar("F", bound=Callable[..., Any])


def _mutation(method: F) -> F:
    """Guard a mutating method with the owner lock and the periodic audit."""

    @wraps(method)
    def wrapper(self: "Forest", *args: Any, **kwargs: Any) -> Any:
        if self._owner is not None and not self._unlocked:
            raise ForestLockedError(
                f"{method.__name__} must go through the owner of this forest"
            )
        self._nesting += 1
        try:
            result = method(self, *args, **kwargs)
        finally:
            self._nesting -= 1
        if self._nesting == 0:
            self._after_mutation()
        return result

    return wrapper  # type: ignore[return-value]


def _out_of_int64(value: Any) -> bool:
    if isinstance(value, bool):
        return False
    if isinstance(value, int):
        return not INT64_MIN <= value <= INT64_MAX
    if isinstance(value, tuple):
        return any(_out_of_int64(x) for x in value)
    if is_dataclass(value) and not isinstance(value, (type, SeqNode)):
        return any(_out_of_int64(getattr(value, f.name)) for f in fields(value))
    return False


class Forest:
    """
    A forest of rooted, ordered trees stored as depth first tours.

    Every tree's tour is a contiguous range of one splay-backed sequence. The
    aggregations and tracked quantities are fixed at construction.

    Args:
        aggregations: Reductions to maintain; ``degree`` is always added.
        tracked: Names of the lazily updated quantities (DeltaTriples).
        config: Forest behaviour (audit frequency, int64 checks, default weight).
    """

    def __init__(
        self,
        aggregations: Iterable[Aggregation] = STANDARD_AGGREGATIONS,
        tracked: Sequence[str] = ("val",),
        config: ForestConfig | None = None,
    ):
        self.config = config or ForestConfig()
        self.registry = AggregationRegistry([DEGREE_AGGREGATION, *aggregations])
        self.tracked: tuple[str, ...] = tuple(tracked)
        if len(set(self.tracked)) != len(self.tracked):
            raise ValueError("tracked quantity names must be unique")
        self._quantity = {name: i for i, name in enumerate(self.tracked)}

        annotations = self.registry.annotations()
        for i, name in enumerate(self.tracked):
            annotations.append(self._up_annotation(name, i))
            annotations.append(self._down_annotation(name, i))
        self._store = SequenceStore(annotations)
        self._up_slots = [self._store.slot(f"delta_up:{q}") for q in self.tracked]
        self._down_slots = [self._store.slot(f"delta_down:{q}") for q in self.tracked]

        self._vertices: dict[Hashable, VertexRecord] = {}
        self._owner: object | None = None
        self._unlocked = False
        self._nesting = 0
        self._mutations = 0

    @staticmethod
    def _up_annotation(name: str, i: int) -> ItemAnnotation:
        return ItemAnnotation(
            f"delta_up:{name}", SUM, lambda r: r.deltas[i].d_up, lambda r: 0
        )

    @staticmethod
    def _down_annotation(name: str, i: int) -> ItemAnnotation:
        return ItemAnnotation(
            f"delta_down:{name}",
            SUM,
            lambda r: r.deltas[i].d_down,
            lambda r: -r.deltas[i].d_down,
        )

    @property
    def store(self) -> SequenceStore:
        return self._store

    # =======================================================================
    # Ownership
    # =======================================================================

    def lock(self, owner: object) -> None:
        """Reserve every mutation for ``owner``, which must use :meth:`unlocked`."""
        if self._owner is not None and self._owner is not owner:
            raise ForestLockedError("forest already has an owner")
        self._owner = owner

    @property
    def locked(self) -> bool:
        return self._owner is not None

    @contextmanager
    def unlocked(self, owner: object) -> Iterator["Forest"]:
        if owner is not self._owner:
            raise ForestLockedError("only the owner may unlock this forest")
        previous = self._unlocked
        self._unlocked = True
        try:
            yield self
        finally:
            self._unlocked = previous

    def _after_mutation(self) -> None:
        every = self.config.audit_every
        if every > 0:
            self._mutations += 1
            if self._mutations % every == 0:
                self.audit()

    # =======================================================================
    # Vertices
    # =======================================================================

    def _record(self, key: Hashable) -> VertexRecord:
        try:
            return self._vertices[key]
        except KeyError:
            raise VertexNotFoundError(key) from None

    def _qi(self, quantity: str) -> int:
        try:
            return self._quantity[quantity]
        except KeyError:
            raise AggregationNotRegisteredError(quantity) from None

    def _new_record(
        self,
        key: Hashable,
        val: Any,
        weight: Any,
        initial: Mapping[str, Any] | None,
    ) -> VertexRecord:
        initial = dict(initial or {})
        for name in initial:
            self._qi(name)
        if "val" in self._quantity:
            initial.setdefault("val", val)
        deltas = [DeltaTriple(d_self=initial.get(q, 0)) for q in self.tracked]
        if weight is None:
            weight = self.config.default_weight
        return VertexRecord(key, val, weight, deltas=deltas)

    @_mutation
    def add_vertex(
        self,
        key: Hashable,
        val: Any = 0,
        weight: Any = None,
        initial: Mapping[str, Any] | None = None,
    ) -> Hashable:
        """Add a singleton tree.

        ``val`` is the reduction payload and, when a ``val`` quantity is tracked,
        its initial effective value. ``initial`` seeds other tracked quantities.
        """
        if key in self._vertices:
            raise DuplicateVertexError(key)
        record = self._new_record(key, val, weight, initial)
        record.open, record.close = self._store.new_pair(record)
        self._vertices[key] = record
        return key

    def __contains__(self, key: Hashable) -> bool:
        return key in self._vertices

    def __len__(self) -> int:
        return len(self._vertices)

    def vertices(self) -> list[Hashable]:
        return list(self._vertices)

    def roots(self) -> list[Hashable]:
        return [k for k, rec in self._vertices.items() if self._parent_record(rec) is None]

    def _touch(self, record: VertexRecord) -> None:
        self._store.refresh(record.open)
        self._store.refresh(record.close)

    def get_val(self, v: Hashable) -> Any:
        return self._record(v).val

    @_mutation
    def set_val(self, v: Hashable, x: Any) -> None:
        """Set the payload folded by reductions and combinations."""
        record = self._record(v)
        record.val = x
        self._touch(record)

    def get_weight(self, v: Hashable) -> Any:
        return self._record(v).weight

    @_mutation
    def set_weight(self, v: Hashable, w: Any) -> None:
        """Set the weight of the edge from ``v`` to its parent."""
        record = self._record(v)
        record.weight = w
        self._touch(record)

    # =======================================================================
    # Navigation
    # =======================================================================

    def _parent_record(self, record: VertexRecord) -> VertexRecord | None:
        return self._ancestor_record(record, 1)

    def _ancestor_record(self, record: VertexRecord, k: int) -> VertexRecord | None:
        start = self._store.successor(record.close)
        if start is None:
            return None
        found = self._store.search_prefix_depth(start, k)
        return None if found is None else found.vertex

    def _root_record(self, record: VertexRecord) -> VertexRecord:
        fold = self._store.suffix_fold(record.close, LCA_SLOT)
        return fold.leftmost_min.vertex

    def _child_records(self, record: VertexRecord) -> list[VertexRecord]:
        children = []
        node = self._store.successor(record.open)
        while node is not record.close:
            children.append(node.vertex)
            node = self._store.successor(node.twin)
        return children

    def _path_records(self, record: VertexRecord) -> list[VertexRecord]:
        """Records from ``record`` up to its root."""
        path = [record]
        parent = self._parent_record(record)
        while parent is not None:
            path.append(parent)
            parent = self._parent_record(parent)
        return path

    def root(self, v: Hashable) -> Hashable:
        return self._root_record(self._record(v)).key

    def parent(self, v: Hashable) -> Hashable | None:
        record = self._parent_record(self._record(v))
        return None if record is None else record.key

    def ancestor(self, v: Hashable, k: int) -> Hashable | None:
        """The k-th ancestor of ``v``; ``v`` itself for k = 0, None above the root."""
        if k < 0:
            raise ValueError("k must not be negative")
        record = self._record(v)
        if k == 0:
            return v
        found = self._ancestor_record(record, k)
        return None if found is None else found.key

    def path(self, v: Hashable) -> list[Hashable]:
        """Vertices from ``v`` up to and including its root."""
        return [r.key for r in self._path_records(self._record(v))]

    def same_tree(self, u: Hashable, v: Hashable) -> bool:
        return self._root_record(self._record(u)) is self._root_record(self._record(v))

    def _is_descendant(self, ru: VertexRecord, rv: VertexRecord) -> bool:
        if ru is rv:
            return True
        store = self._store
        if not store.same_sequence(ru.open, rv.open):
            return False
        return store.precedes(rv.open, ru.open) and store.precedes(ru.close, rv.close)

    def is_descendant(self, u: Hashable, v: Hashable) -> bool:
        """True iff ``u`` lies in the subtree of ``v`` (a vertex is its own descendant)."""
        return self._is_descendant(self._record(u), self._record(v))

    def _lca_record(self, ru: VertexRecord, rv: VertexRecord) -> VertexRecord:
        if self._root_record(ru) is not self._root_record(rv):
            raise DifferentTreesError(f"{ru.key!r} and {rv.key!r} are in different trees")
        if self._is_descendant(ru, rv):
            return rv
        if self._is_descendant(rv, ru):
            return ru
        first, second = ru.close, rv.close
        if not self._store.precedes(first, second):
            first, second = second, first
        w = self._store.range_fold(first, second, LCA_SLOT).leftmost_min
        return self._parent_record(w.vertex)

    def lca(self, u: Hashable, v: Hashable) -> Hashable:
        return self._lca_record(self._record(u), self._record(v)).key

    def list_children(self, v: Hashable) -> list[Hashable]:
        """Children in tour order."""
        return [c.key for c in self._child_records(self._record(v))]

    def degree(self, v: Hashable) -> int:
        return self.reduce_children(v, DEGREE)

    # =======================================================================
    # Reductions
    # =======================================================================

    def _interior(self, record: VertexRecord) -> tuple[SeqNode, SeqNode] | None:
        """First and last node strictly between Open(v) and Close(v)."""
        first = self._store.successor(record.open)
        if first is record.close:
            return None
        return first, self._store.predecessor(record.close)

    def reduce_children(self, v: Hashable, name: str) -> Any:
        """⊕ over the values of the children of ``v``; the ⊕ identity for leaves."""
        aggregation = self.registry.require(name, ChildReduction)
        interior = self._interior(self._record(v))
        if interior is None:
            return aggregation.plus.identity
        return self._store.range_fold(*interior, self._store.slot(name)).body

    def reduce_child_subtrees(self, v: Hashable, name: str) -> Any:
        """⊗ over the ⊕-totals of the child subtrees of ``v``; the ⊗ identity for leaves."""
        aggregation = self.registry.require(name, SubtreeReduction)
        interior = self._interior(self._record(v))
        if interior is None:
            return aggregation.times.identity
        return self._store.range_fold(*interior, self._store.slot(name)).body_times

    def combine(self, v: Hashable, name: str = PATH_VAL) -> Any:
        """⊙ over the path from ``v`` to its root."""
        self.registry.require(name, PathCombination)
        return self._store.prefix_fold(self._record(v).open, self._store.slot(name))

    def _subtree_total(self, v: Hashable, name: str) -> Any:
        aggregation = self.registry.require(name, SubtreeReduction)
        own = aggregation.source(self._record(v))
        return aggregation.plus.op(own, self.reduce_child_subtrees(v, name))

    def subtree_sum(self, v: Hashable) -> Any:
        return self._subtree_total(v, SUBTREE_SUM)

    def subtree_size(self, v: Hashable) -> int:
        return self._subtree_total(v, SUBTREE_SIZE)

    def subtree_max(self, v: Hashable) -> Any:
        return self._subtree_total(v, SUBTREE_MAX)

    def maxsum_child(self, v: Hashable) -> Any:
        return self.reduce_child_subtrees(v, MAXSUM_CHILD)

    def children_sum(self, v: Hashable) -> Any:
        return self.reduce_children(v, "children_sum")

    def children_max(self, v: Hashable) -> Any:
        return self.reduce_children(v, "children_max")

    def depth(self, v: Hashable) -> int:
        """Number of vertices on the path to the root; 1 at the root."""
        return self.combine(v, DEPTH)

    def distance(self, u: Hashable, v: Hashable) -> int:
        w = self.lca(u, v)
        return self.depth(u) + self.depth(v) - 2 * self.depth(w)

    def weighted_depth(self, v: Hashable) -> Any:
        """Sum of edge weights from ``v`` up to its root."""
        record = self._record(v)
        return self.combine(v, WEIGHTED_DEPTH) - self._root_record(record).weight

    def weighted_distance(self, u: Hashable, v: Hashable) -> Any:
        w = self.lca(u, v)
        raw = self.combine(u, WEIGHTED_DEPTH) + self.combine(v, WEIGHTED_DEPTH)
        return raw - 2 * self.combine(w, WEIGHTED_DEPTH)

    def subtree_moment(self, v: Hashable) -> Any:
        """Sum over the subtree of ``v`` of the weighted distance to ``v``."""
        aggregation = self.registry.require(MOMENT, SubtreeMoment)
        record = self._record(v)
        m = self._store.range_fold(record.open, record.close, self._store.slot(MOMENT))
        return m.moment - m.count * aggregation.weight(record)

    # =======================================================================
    # Lazy values
    # =======================================================================

    def _subtree_up(self, record: VertexRecord, qi: int) -> Any:
        return self._store.range_fold(record.open, record.close, self._up_slots[qi])

    def _path_down(self, record: VertexRecord, qi: int) -> Any:
        return self._store.prefix_fold(record.open, self._down_slots[qi])

    def _effective(self, record: VertexRecord, qi: int) -> Any:
        d = record.deltas[qi]
        return d.d_self + self._subtree_up(record, qi) + self._path_down(record, qi)

    def get_effective_val(self, v: Hashable, quantity: str = "val") -> Any:
        return self._effective(self._record(v), self._qi(quantity))

    @_mutation
    def change_val(self, v: Hashable, x: Any, quantity: str = "val") -> None:
        """Make the effective value of ``v`` equal ``x``."""
        record = self._record(v)
        qi = self._qi(quantity)
        record.deltas[qi].d_self += x - self._effective(record, qi)

    @_mutation
    def add_to_path(self, v: Hashable, delta: Any, quantity: str = "val") -> None:
        """Add ``delta`` to every vertex on the path from ``v`` to its root."""
        record = self._record(v)
        record.deltas[self._qi(quantity)].d_up += delta
        self._store.refresh(record.open)

    @_mutation
    def add_to_subtree(self, v: Hashable, delta: Any, quantity: str = "val") -> None:
        """Add ``delta`` to every vertex in the subtree of ``v``."""
        record = self._record(v)
        record.deltas[self._qi(quantity)].d_down += delta
        self._touch(record)

    # =======================================================================
    # Structural operations
    # =======================================================================

    def _detach(self, record: VertexRecord) -> None:
        """Move the tour of ``record``'s subtree into its own sequence."""
        store = self._store
        left, _ = store.split_before(record.open)
        _, right = store.split_after(record.close)
        store.merge(left, right)

    @_mutation
    def link(self, u: Hashable, v: Hashable, weight: Any = None) -> None:
        """Make the root ``v`` the first child of ``u``.

        Args:
            u: New parent.
            v: Root of a tree not containing ``u``.
            weight: Weight of the new edge; keeps ``v``'s stored weight when None.
        """
        ru, rv = self._record(u), self._record(v)
        if ru is rv:
            raise CycleError(f"cannot link {u!r} to itself")
        if self._parent_record(rv) is not None:
            raise NotRootError(f"{v!r} is not the root of its tree")
        if self._root_record(ru) is rv:
            raise CycleError(f"{u!r} and {v!r} are already in the same tree")

        for qi in range(len(self.tracked)):
            up = self._subtree_up(rv, qi)
            down = self._path_down(ru, qi)
            ru.deltas[qi].d_up -= up
            rv.deltas[qi].d_down -= down
        if weight is not None:
            rv.weight = weight
        self._touch(ru)
        self._touch(rv)

        self._detach(rv)
        store = self._store
        head, tail = store.split_after(ru.open)
        store.concat(head, rv.open, tail)
        logger.debug(f"link {u!r} -> {v!r}")

    @_mutation
    def cut(self, v: Hashable) -> None:
        """Detach the subtree of ``v`` from its parent; no-op on roots."""
        rv = self._record(v)
        rp = self._parent_record(rv)
        if rp is None:
            return
        self._detach(rv)
        for qi in range(len(self.tracked)):
            rp.deltas[qi].d_up += self._subtree_up(rv, qi)
            rv.deltas[qi].d_down += self._path_down(rp, qi)
        self._touch(rp)
        self._touch(rv)
        logger.debug(f"cut {v!r} from {rp.key!r}")

    @_mutation
    def condense(self, v: Hashable) -> None:
        """Delete ``v``; its children take its place under its parent (or become roots)."""
        rv = self._record(v)
        rp = self._parent_record(rv)
        pushed = [qi for qi, d in enumerate(rv.deltas) if d.d_down != 0]
        if pushed:
            for child in self._child_records(rv):
                for qi in pushed:
                    child.deltas[qi].d_down += rv.deltas[qi].d_down
                self._touch(child)
        if rp is not None and any(d.d_up != 0 for d in rv.deltas):
            for qi, d in enumerate(rv.deltas):
                rp.deltas[qi].d_up += d.d_up
            self._store.refresh(rp.open)

        self._store.erase(rv.open)
        self._store.erase(rv.close)
        del self._vertices[v]
        logger.debug(f"condense {v!r}")

    @_mutation
    def erase(self, v: Hashable) -> None:
        self.cut(v)
        self.condense(v)

    @_mutation
    def evert(self, v: Hashable) -> None:
        """Make ``v`` the root of its tree by reversing the path to the old root.

        Edge weights travel with their edges. Costs O(d log n) for depth d.
        """
        path = self._path_records(self._record(v))
        if len(path) == 1:
            return
        weights = [r.weight for r in path[:-1]]
        for record in path[:-1]:
            self.cut(record.key)
        for i in range(len(path) - 2, -1, -1):
            self.link(path[i].key, path[i + 1].key, weights[i])
        logger.debug(f"evert {v!r} over depth {len(path) - 1}")

    def splice(self, v: Hashable) -> None:
        """Give the tree of ``v`` a dedicated sequence."""
        self._detach(self._root_record(self._record(v)))

    # =======================================================================
    # Bulk operations
    # =======================================================================

    def _tour(self, root: VertexRecord) -> list[SeqNode]:
        self._detach(root)
        return list(self._store.iter_nodes(root.open))

    def _effective_all(self, tour: list[SeqNode]) -> dict[Hashable, list[Any]]:
        """Effective values of every tracked quantity for a whole tour, in one pass."""
        width = len(self.tracked)
        down = [0] * width
        up: dict[Hashable, list[Any]] = {}
        path_down: dict[Hashable, list[Any]] = {}
        stack: list[VertexRecord] = []
        effective: dict[Hashable, list[Any]] = {}
        for node in tour:
            record = node.vertex
            if node.is_open:
                down = [down[i] + record.deltas[i].d_down for i in range(width)]
                path_down[record.key] = down
                up[record.key] = [d.d_up for d in record.deltas]
                stack.append(record)
                continue
            stack.pop()
            own_up = up[record.key]
            pd = path_down[record.key]
            effective[record.key] = [
                record.deltas[i].d_self + own_up[i] + pd[i] for i in range(width)
            ]
            down = [pd[i] - record.deltas[i].d_down for i in range(width)]
            if stack:
                parent_up = up[stack[-1].key]
                up[stack[-1].key] = [parent_up[i] + own_up[i] for i in range(width)]
        return effective

    def _build(self, root: Hashable, children: Mapping[Hashable, list[Hashable]]) -> None:
        nodes: list[SeqNode] = []
        stack: list[tuple[Hashable, bool]] = [(root, False)]
        while stack:
            key, closing = stack.pop()
            record = self._vertices[key]
            if closing:
                nodes.append(record.close)
                continue
            nodes.append(record.open)
            stack.append((key, True))
            for child in reversed(children.get(key, [])):
                stack.append((child, False))
        self._store.build(nodes)

    def export_tree(self, v: Hashable) -> RootedTree:
        """Adjacency form of the tree containing ``v``."""
        root = self._root_record(self._record(v))
        tree = RootedTree(root.key)
        stack: list[VertexRecord] = []
        for node in self._tour(root):
            record = node.vertex
            if node.is_close:
                stack.pop()
                continue
            if stack:
                tree.parent[record.key] = stack[-1].key
                tree.children[stack[-1].key].append(record.key)
            tree.children[record.key] = []
            tree.vals[record.key] = record.val
            tree.weights[record.key] = record.weight
            stack.append(record)
        return tree

    @_mutation
    def import_tree(self, tree: RootedTree) -> list[Hashable]:
        """Add a whole tree in linear time; returns its vertices in preorder."""
        children = self._validate_tree(tree)
        order: list[Hashable] = []
        stack = [tree.root]
        while stack:
            key = stack.pop()
            order.append(key)
            stack.extend(reversed(children[key]))

        for key in order:
            record = self._new_record(
                key, tree.vals.get(key, 0), tree.weights.get(key), None
            )
            record.open = self._store.new_node(Kind.OPEN, record)
            record.close = self._store.new_node(Kind.CLOSE, record)
            record.open.twin = record.close
            record.close.twin = record.open
            self._vertices[key] = record
        self._build(tree.root, children)
        logger.debug(f"imported tree of {len(order)} vertices rooted at {tree.root!r}")
        return order

    def _validate_tree(self, tree: RootedTree) -> dict[Hashable, list[Hashable]]:
        if tree.root in tree.parent:
            raise InvalidTreeError(f"root {tree.root!r} has a parent")
        keys = {tree.root, *tree.parent, *tree.parent.values()}
        for key in keys:
            if key in self._vertices:
                raise DuplicateVertexError(key)

        derived: dict[Hashable, list[Hashable]] = {key: [] for key in keys}
        for child, parent in tree.parent.items():
            derived[parent].append(child)
        for key, listed in tree.children.items():
            if key not in derived:
                raise InvalidTreeError(f"children listed for unknown vertex {key!r}")
            if len(listed) != len(set(listed)) or set(listed) != set(derived[key]):
                raise InvalidTreeError(f"child order of {key!r} disagrees with the parent map")
            derived[key] = list(listed)

        seen = {tree.root}
        stack = [tree.root]
        while stack:
            for child in derived[stack.pop()]:
                seen.add(child)
                stack.append(child)
        if len(seen) != len(keys):
            raise InvalidTreeError("parent map has a cycle or a vertex unreachable from the root")
        return derived

    @_mutation
    def reroot(self, v: Hashable) -> None:
        """Make ``v`` the root of its tree by rebuilding the whole tour in O(n).

        Produces the same shape, child order and weights as :meth:`evert`.
        """
        rv = self._record(v)
        root = self._root_record(rv)
        if root is rv:
            return
        tour = self._tour(root)
        effective = self._effective_all(tour)
        old = self.export_tree(v)

        path = [v]
        while path[-1] != old.root:
            path.append(old.parent[path[-1]])
        children = {k: list(c) for k, c in old.children.items()}
        for lower, upper in zip(path, path[1:]):
            children[upper].remove(lower)
            children[lower].insert(0, upper)
            self._vertices[upper].weight = old.weights[lower]

        for key, values in effective.items():
            self._vertices[key].deltas = [DeltaTriple(d_self=x) for x in values]
        self._build(v, children)
        logger.debug(f"rerooted tree of {len(effective)} vertices at {v!r}")

    # =======================================================================
    # Audit
    # =======================================================================

    def audit(self) -> int:
        """Check every structural and annotation invariant; returns the vertex count."""
        store = self._store
        seen: set[Hashable] = set()
        total = 0
        for record in list(self._vertices.values()):
            if record.key in seen:
                continue
            total += store.audit(record.open)
            if store.representative(record.open).folds[LCA_SLOT].summary != EMPTY_DEPTH:
                raise AuditError(f"sequence of {record.key!r} is not balanced")
            stack: list[VertexRecord] = []
            for node in store.iter_nodes(record.open):
                owner = node.vertex
                if self._vertices.get(owner.key) is not owner:
                    raise AuditError(f"node of erased vertex {owner.key!r} is still linked")
                expected = owner.open if node.is_open else owner.close
                if node is not expected or node.twin is not (
                    owner.close if node.is_open else owner.open
                ):
                    raise AuditError(f"twin links of {owner.key!r} are inconsistent")
                if node.is_open:
                    seen.add(owner.key)
                    stack.append(owner)
                elif not stack or stack.pop() is not owner:
                    raise AuditError(f"tour of {owner.key!r} is not properly nested")
                if self.config.check_int64:
                    self._audit_int64(node)
            if stack:
                raise AuditError(f"tour of {stack[-1].key!r} is never closed")
        if total != 2 * len(self._vertices):
            raise AuditError(f"{total} tour nodes for {len(self._vertices)} vertices")
        return len(self._vertices)

    @staticmethod
    def _audit_int64(node: SeqNode) -> None:
        record = node.vertex
        values = [record.val, *node.items, *node.folds]
        for d in record.deltas:
            values.extend((d.d_up, d.d_down, d.d_self))
        if any(_out_of_int64(value) for value in values):
            raise AuditError(f"integer aggregate out of int64 range at {record.key!r}")
