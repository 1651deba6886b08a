"""Incremental biconnectivity with a block forest kept on depth first tours."""

from dataclasses import dataclass
from itertools import count
from typing import Hashable

from loguru import logger

from dftree.config.schema import ForestConfig
from dftree.errors import (
    AuditError,
    DuplicateVertexError,
    SelfLoopError,
    UnsupportedOperationError,
    VertexNotFoundError,
)
from dftree.forest.aggregations import (
    DEPTH,
    MAXSUM_CHILD,
    SUBTREE_SUM,
    PathCombination,
    SubtreeReduction,
)
from dftree.forest.algebra import MAX, SUM, unit
from dftree.forest.forest import Forest


@dataclass(frozen=True, slots=True)
class Square:
    """A graph vertex in the block forest."""
    id: Hashable


@dataclass(frozen=True, slots=True)
class Round:
    """A biconnected component (block) in the block forest."""
    serial: int


BLOCK_AGGREGATIONS = (
    SubtreeReduction(SUBTREE_SUM, SUM, SUM),
    SubtreeReduction(MAXSUM_CHILD, SUM, MAX),
    PathCombination(DEPTH, SUM, unit),
)


class BlockForest:
    """
    Streaming undirected graph answering connectivity and biconnectivity queries.

    Squares carry value 1 and Rounds value 0, so subtree sums count graph vertices.
    Every tree edge joins a Square to a Round; the Squares around a Round are
    exactly the vertices of one block.
    """

    def __init__(self, config: ForestConfig | None = None):
        self.forest = Forest(BLOCK_AGGREGATIONS, tracked=(), config=config)
        self._rounds: set[Round] = set()
        self._serials = count()

    def _square(self, vertex: Hashable) -> Square:
        square = Square(vertex)
        if square not in self.forest:
            raise VertexNotFoundError(vertex)
        return square

    def _new_round(self) -> Round:
        block = Round(next(self._serials))
        self.forest.add_vertex(block, val=0)
        self._rounds.add(block)
        return block

    def _path_to(self, x: Hashable, ancestor: Hashable) -> list[Hashable]:
        """Vertices from ``x`` up to, excluding, ``ancestor``."""
        path = []
        while x != ancestor:
            path.append(x)
            x = self.forest.parent(x)
        return path

    def _block_members(self, block: Round) -> list[Square]:
        members = self.forest.list_children(block)
        parent = self.forest.parent(block)
        if parent is not None:
            members.append(parent)
        return members

    # =======================================================================
    # Updates
    # =======================================================================

    def add_vertex(self, vertex: Hashable) -> Hashable:
        square = Square(vertex)
        if square in self.forest:
            raise DuplicateVertexError(vertex)
        self.forest.add_vertex(square, val=1)
        return vertex

    def insert_edge(self, u: Hashable, v: Hashable) -> None:
        """Add the undirected edge {u, v}; repeated edges change nothing."""
        if u == v:
            raise SelfLoopError(f"self-loop on {u!r}")
        su, sv = self._square(u), self._square(v)
        f = self.forest

        if not f.same_tree(su, sv):
            if self.component_size(u) < self.component_size(v):
                su, sv = sv, su
            f.evert(sv)
            bridge = self._new_round()
            f.link(su, bridge)
            f.link(bridge, sv)
            return

        if f.distance(su, sv) == 2:
            return

        top = f.lca(su, sv)
        rounds_u = [x for x in self._path_to(su, top) if isinstance(x, Round)]
        rounds_v = [x for x in self._path_to(sv, top) if isinstance(x, Round)]
        if isinstance(top, Round):
            survivor = top
        elif rounds_u:
            survivor = rounds_u[-1]
        else:
            survivor = rounds_v[-1]

        merged = 0
        for block in rounds_u + rounds_v:
            if block == survivor:
                continue
            f.cut(block)
            f.link(survivor, block)
            f.condense(block)
            self._rounds.discard(block)
            merged += 1
        logger.debug(f"edge {u!r}-{v!r} merged {merged + 1} blocks into {survivor}")

    def delete_edge(self, u: Hashable, v: Hashable) -> None:
        raise UnsupportedOperationError("edge deletion is not supported")

    # =======================================================================
    # Queries
    # =======================================================================

    def connected(self, u: Hashable, v: Hashable) -> bool:
        return self.forest.same_tree(self._square(u), self._square(v))

    def is_articulation(self, u: Hashable) -> bool:
        """True iff ``u`` lies in at least two blocks."""
        square = self._square(u)
        rounds = self.forest.degree(square)
        if self.forest.parent(square) is not None:
            rounds += 1
        return rounds >= 2

    def is_bridge(self, u: Hashable, v: Hashable) -> bool:
        """True iff {u, v} is a block of its own."""
        su, sv = self._square(u), self._square(v)
        if su == sv:
            return False
        f = self.forest
        pu, pv = f.parent(su), f.parent(sv)
        block = None
        if pu is not None and (pu == pv or f.parent(pu) == sv):
            block = pu
        elif pv is not None and f.parent(pv) == su:
            block = pv
        return block is not None and len(self._block_members(block)) == 2

    def component_size(self, u: Hashable) -> int:
        """Number of graph vertices connected to ``u``."""
        f = self.forest
        return f.subtree_sum(f.root(self._square(u)))

    def impact(self, u: Hashable) -> int:
        """Vertices cut off from the largest remaining piece when ``u`` is removed."""
        if not self.is_articulation(u):
            return 0
        f = self.forest
        square = Square(u)
        n = self.component_size(u)
        largest = f.maxsum_child(square)
        if f.parent(square) is not None:
            largest = max(largest, n - f.subtree_sum(square))
        return n - 1 - largest

    def articulation_points(self) -> set[Hashable]:
        return {sq.id for sq in self._squares() if self.is_articulation(sq.id)}

    def blocks(self) -> list[frozenset[Hashable]]:
        return [frozenset(sq.id for sq in self._block_members(b)) for b in self._rounds]

    def bridges(self) -> set[frozenset[Hashable]]:
        return {block for block in self.blocks() if len(block) == 2}

    def num_components(self) -> int:
        return len(self.forest.roots())

    def _squares(self) -> list[Square]:
        return [key for key in self.forest.vertices() if isinstance(key, Square)]

    def vertices(self) -> list[Hashable]:
        return [sq.id for sq in self._squares()]

    def __contains__(self, vertex: Hashable) -> bool:
        return Square(vertex) in self.forest

    def __len__(self) -> int:
        return len(self._squares())

    def audit(self) -> None:
        """Check the forest plus bipartiteness, value tags and block sizes."""
        f = self.forest
        f.audit()
        for key in f.vertices():
            parent = f.parent(key)
            if parent is not None and type(parent) is type(key):
                raise AuditError(f"{key} and its parent {parent} have the same kind")
            expected = 1 if isinstance(key, Square) else 0
            if f.get_val(key) != expected:
                raise AuditError(f"{key} carries value {f.get_val(key)!r}")
            if isinstance(key, Round):
                if key not in self._rounds:
                    raise AuditError(f"{key} is not registered")
                if len(self._block_members(key)) < 2:
                    raise AuditError(f"{key} has fewer than two members")
        if len(self._rounds) != sum(1 for k in f.vertices() if isinstance(k, Round)):
            raise AuditError("block registry out of sync with the forest")
