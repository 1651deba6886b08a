"""Reference forest on parent maps and child lists, answering by direct traversal."""

import operator
from dataclasses import dataclass, field
from itertools import combinations
from typing import Any, Callable, Hashable

import networkx as nx

from dftree.errors import (
    CycleError,
    DifferentTreesError,
    DuplicateVertexError,
    NotRootError,
    UndefinedValueError,
    VertexNotFoundError,
)

Op = Callable[[Any, Any], Any]


@dataclass
class NaiveForest:
    """
    Rooted ordered forest mirroring the fast forest's mutation semantics.

    ``vals`` is the reduction payload, ``effective`` the lazily updated value
    stored eagerly, ``weights`` the child-stored edge weights.
    """
    parent: dict[Hashable, Hashable] = field(default_factory=dict)
    children: dict[Hashable, list[Hashable]] = field(default_factory=dict)
    vals: dict[Hashable, Any] = field(default_factory=dict)
    weights: dict[Hashable, Any] = field(default_factory=dict)
    effective: dict[Hashable, Any] = field(default_factory=dict)

    def _require(self, *vertices: Hashable) -> None:
        for v in vertices:
            if v not in self.children:
                raise VertexNotFoundError(v)

    def add_vertex(self, key: Hashable, val: Any = 0, weight: Any = 1) -> Hashable:
        if key in self.children:
            raise DuplicateVertexError(key)
        self.children[key] = []
        self.vals[key] = val
        self.weights[key] = weight
        self.effective[key] = val
        return key

    def link(self, u: Hashable, v: Hashable, weight: Any = None) -> None:
        self._require(u, v)
        if u == v:
            raise CycleError(f"cannot link {u!r} to itself")
        if v in self.parent:
            raise NotRootError(f"{v!r} is not the root of its tree")
        if naive_root(self, u) == v:
            raise CycleError(f"{u!r} and {v!r} are already in the same tree")
        self.children[u].insert(0, v)
        self.parent[v] = u
        if weight is not None:
            self.weights[v] = weight

    def cut(self, v: Hashable) -> None:
        self._require(v)
        p = self.parent.pop(v, None)
        if p is not None:
            self.children[p].remove(v)

    def condense(self, v: Hashable) -> None:
        self._require(v)
        kids = self.children.pop(v)
        p = self.parent.pop(v, None)
        if p is None:
            for c in kids:
                del self.parent[c]
        else:
            at = self.children[p].index(v)
            self.children[p][at:at + 1] = kids
            for c in kids:
                self.parent[c] = p
        for table in (self.vals, self.weights, self.effective):
            del table[v]

    def erase(self, v: Hashable) -> None:
        self.cut(v)
        self.condense(v)

    def evert(self, v: Hashable) -> None:
        path = naive_path(self, v)
        old_weights = {x: self.weights[x] for x in path}
        for lower, upper in zip(path, path[1:]):
            self.children[upper].remove(lower)
            self.children[lower].insert(0, upper)
            self.parent[upper] = lower
            self.weights[upper] = old_weights[lower]
        self.parent.pop(v, None)

    def set_val(self, v: Hashable, x: Any) -> None:
        self._require(v)
        self.vals[v] = x

    def change_val(self, v: Hashable, x: Any) -> None:
        self._require(v)
        self.effective[v] = x

    def add_to_path(self, v: Hashable, delta: Any) -> None:
        for x in naive_path(self, v):
            self.effective[x] += delta

    def add_to_subtree(self, v: Hashable, delta: Any) -> None:
        for x in naive_subtree(self, v):
            self.effective[x] += delta

    def graph(self) -> nx.Graph:
        """Undirected weighted view of the forest."""
        g = nx.Graph()
        g.add_nodes_from(self.children)
        g.add_weighted_edges_from((c, p, self.weights[c]) for c, p in self.parent.items())
        return g


# ===========================================================================
# Navigation
# ===========================================================================


def naive_path(f: NaiveForest, v: Hashable) -> list[Hashable]:
    f._require(v)
    path = [v]
    while path[-1] in f.parent:
        path.append(f.parent[path[-1]])
    return path


def naive_root(f: NaiveForest, v: Hashable) -> Hashable:
    return naive_path(f, v)[-1]


def naive_parent(f: NaiveForest, v: Hashable) -> Hashable | None:
    f._require(v)
    return f.parent.get(v)


def naive_ancestor(f: NaiveForest, v: Hashable, k: int) -> Hashable | None:
    if k < 0:
        raise ValueError("k must not be negative")
    path = naive_path(f, v)
    return path[k] if k < len(path) else None


def naive_depth(f: NaiveForest, v: Hashable) -> int:
    return len(naive_path(f, v))


def naive_same_tree(f: NaiveForest, u: Hashable, v: Hashable) -> bool:
    return naive_root(f, u) == naive_root(f, v)


def naive_is_descendant(f: NaiveForest, u: Hashable, v: Hashable) -> bool:
    f._require(v)
    return v in naive_path(f, u)


def naive_lca(f: NaiveForest, u: Hashable, v: Hashable) -> Hashable:
    """First vertex of u's root path that also lies on v's root path."""
    on_v = set(naive_path(f, v))
    for x in naive_path(f, u):
        if x in on_v:
            return x
    raise DifferentTreesError(f"{u!r} and {v!r} are in different trees")


def naive_children(f: NaiveForest, v: Hashable) -> list[Hashable]:
    f._require(v)
    return list(f.children[v])


def naive_subtree(f: NaiveForest, v: Hashable) -> list[Hashable]:
    f._require(v)
    out, stack = [], [v]
    while stack:
        x = stack.pop()
        out.append(x)
        stack.extend(f.children[x])
    return out


# ===========================================================================
# Reductions
# ===========================================================================


def naive_reduce_children(f: NaiveForest, v: Hashable, op: Op, identity: Any) -> Any:
    acc = identity
    for c in naive_children(f, v):
        acc = op(acc, f.vals[c])
    return acc


def naive_reduce_child_subtrees(
    f: NaiveForest, v: Hashable, plus: Op, plus_identity: Any, times: Op, times_identity: Any
) -> Any:
    acc = times_identity
    for c in naive_children(f, v):
        total = plus_identity
        for x in naive_subtree(f, c):
            total = plus(total, f.vals[x])
        acc = times(acc, total)
    return acc


def naive_combine(f: NaiveForest, v: Hashable, op: Op = operator.add, identity: Any = 0) -> Any:
    acc = identity
    for x in reversed(naive_path(f, v)):
        acc = op(acc, f.vals[x])
    return acc


def naive_subtree_sum(f: NaiveForest, v: Hashable) -> Any:
    return sum(f.vals[x] for x in naive_subtree(f, v))


def naive_subtree_size(f: NaiveForest, v: Hashable) -> int:
    return len(naive_subtree(f, v))


def naive_subtree_max(f: NaiveForest, v: Hashable) -> Any:
    return max(f.vals[x] for x in naive_subtree(f, v))


def naive_maxsum_child(f: NaiveForest, v: Hashable) -> Any:
    return naive_reduce_child_subtrees(f, v, operator.add, 0, max, float("-inf"))


def naive_effective_val(f: NaiveForest, v: Hashable) -> Any:
    f._require(v)
    return f.effective[v]


# ===========================================================================
# Distances and centrality
# ===========================================================================


def naive_distance(f: NaiveForest, u: Hashable, v: Hashable, weighted: bool = True) -> Any:
    f._require(u, v)
    try:
        return nx.shortest_path_length(f.graph(), u, v, weight="weight" if weighted else None)
    except nx.NetworkXNoPath:
        raise DifferentTreesError(f"{u!r} and {v!r} are in different trees") from None


def naive_farness(f: NaiveForest, v: Hashable) -> Any:
    f._require(v)
    return sum(nx.single_source_dijkstra_path_length(f.graph(), v, weight="weight").values())


def naive_down_dists(f: NaiveForest, v: Hashable) -> Any:
    lengths = nx.single_source_dijkstra_path_length(f.graph(), v, weight="weight")
    return sum(lengths[x] for x in naive_subtree(f, v))


def naive_closeness(f: NaiveForest, v: Hashable) -> float:
    far = naive_farness(f, v)
    if far == 0:
        raise UndefinedValueError(f"closeness of {v!r} is undefined: farness is 0")
    return 1 / far


def naive_betweenness(f: NaiveForest, v: Hashable) -> int:
    """Count unordered pairs of other vertices whose path has ``v`` strictly inside."""
    f._require(v)
    g = f.graph()
    component = nx.node_connected_component(g, v) - {v}
    count = 0
    for s, t in combinations(sorted(component, key=repr), 2):
        if v in nx.shortest_path(g, s, t)[1:-1]:
            count += 1
    return count
