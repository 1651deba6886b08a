"""Static biconnectivity by lowpoint DFS, recomputed from scratch on every query."""

from dataclasses import dataclass, field
from typing import Hashable, Iterator

import networkx as nx

from dftree.errors import DuplicateVertexError, SelfLoopError, VertexNotFoundError


@dataclass
class NaiveGraph:
    """Undirected simple graph over adjacency sets."""
    graph: nx.Graph = field(default_factory=nx.Graph)

    def add_vertex(self, vertex: Hashable) -> Hashable:
        if vertex in self.graph:
            raise DuplicateVertexError(vertex)
        self.graph.add_node(vertex)
        return vertex

    def insert_edge(self, u: Hashable, v: Hashable) -> None:
        if u == v:
            raise SelfLoopError(f"self-loop on {u!r}")
        for x in (u, v):
            if x not in self.graph:
                raise VertexNotFoundError(x)
        self.graph.add_edge(u, v)


def require_vertices(g: NaiveGraph, *vertices: Hashable) -> None:
    for v in vertices:
        if v not in g.graph:
            raise VertexNotFoundError(v)


def _biconnected_dfs(graph: nx.Graph, components: bool = True) -> Iterator:
    """Yield edge lists of blocks, or articulation points when ``components`` is False."""
    visited = set()
    for start in graph.nodes():
        if start in visited:
            continue
        discovery = {start: 0}
        low = {start: 0}
        root_children = 0
        visited.add(start)
        edge_stack: list[tuple[Hashable, Hashable]] = []
        stack = [(start, start, iter(graph[start]))]
        while stack:
            grandparent, parent, children = stack[-1]
            try:
                child = next(children)
                if grandparent == child:
                    continue
                if child in visited:
                    if discovery[child] <= discovery[parent]:  # back edge
                        low[parent] = min(low[parent], discovery[child])
                        if components:
                            edge_stack.append((parent, child))
                else:
                    low[child] = discovery[child] = len(discovery)
                    visited.add(child)
                    stack.append((parent, child, iter(graph[child])))
                    if components:
                        edge_stack.append((parent, child))
            except StopIteration:
                stack.pop()
                if len(stack) > 1:
                    if low[parent] >= discovery[grandparent]:
                        if components:
                            ind = edge_stack.index((grandparent, parent))
                            yield edge_stack[ind:]
                            edge_stack = edge_stack[:ind]
                        else:
                            yield grandparent
                    low[grandparent] = min(low[parent], low[grandparent])
                elif stack:  # grandparent is the root
                    root_children += 1
                    if components:
                        ind = edge_stack.index((grandparent, parent))
                        yield edge_stack[ind:]
                        edge_stack = edge_stack[:ind]
        if not components and root_children > 1:
            yield start


def naive_articulations(g: NaiveGraph) -> set[Hashable]:
    return set(_biconnected_dfs(g.graph, components=False))


def naive_is_articulation(g: NaiveGraph, u: Hashable) -> bool:
    require_vertices(g, u)
    return u in naive_articulations(g)


def naive_blocks(g: NaiveGraph) -> list[frozenset[Hashable]]:
    return [
        frozenset(x for edge in edges for x in edge)
        for edges in _biconnected_dfs(g.graph, components=True)
    ]


def naive_bridges(g: NaiveGraph) -> set[frozenset[Hashable]]:
    return {block for block in naive_blocks(g) if len(block) == 2}


def naive_connected(g: NaiveGraph, u: Hashable, v: Hashable) -> bool:
    require_vertices(g, u, v)
    return nx.has_path(g.graph, u, v)


def naive_component_size(g: NaiveGraph, u: Hashable) -> int:
    require_vertices(g, u)
    return len(nx.node_connected_component(g.graph, u))


def naive_is_bridge(g: NaiveGraph, u: Hashable, v: Hashable) -> bool:
    require_vertices(g, u, v)
    return frozenset((u, v)) in naive_bridges(g)


def naive_impact(g: NaiveGraph, u: Hashable) -> int:
    """Remove ``u`` and count the vertices outside the largest surviving piece."""
    require_vertices(g, u)
    component = nx.node_connected_component(g.graph, u)
    rest = g.graph.subgraph(component - {u})
    pieces = [len(c) for c in nx.connected_components(rest)]
    if len(pieces) <= 1:
        return 0
    return len(component) - 1 - max(pieces)
