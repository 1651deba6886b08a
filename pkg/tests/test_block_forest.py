"""
Tests for incremental biconnectivity on the block forest.
"""

import networkx as nx
import pytest
from conftest import same_outcome
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.stateful import RuleBasedStateMachine, invariant, rule

from dftree.blocks import BlockForest
from dftree.config.schema import ForestConfig
from dftree.errors import (
    DuplicateVertexError,
    SelfLoopError,
    UnsupportedOperationError,
    VertexNotFoundError,
)
from dftree.oracle import naive_graph as ng


def graph_of(vertices, edges):
    blocks = BlockForest(ForestConfig(audit_every=1))
    for v in vertices:
        blocks.add_vertex(v)
    for u, v in edges:
        blocks.insert_edge(u, v)
    blocks.audit()
    return blocks


def test_fresh_vertices_are_components():
    blocks = graph_of("abc", [])
    assert blocks.num_components() == 3
    assert len(blocks) == 3
    with pytest.raises(DuplicateVertexError):
        blocks.add_vertex("a")


def test_triangle_is_one_block():
    blocks = graph_of("abc", [("a", "b"), ("b", "c"), ("c", "a")])
    assert blocks.articulation_points() == set()
    assert blocks.blocks() == [frozenset("abc")]
    assert blocks.bridges() == set()
    assert all(blocks.impact(v) == 0 for v in "abc")


def test_path_middle_is_articulation():
    blocks = graph_of("abc", [("a", "b"), ("b", "c")])
    assert blocks.is_articulation("b")
    assert not blocks.is_articulation("a")
    assert blocks.is_bridge("a", "b")
    assert blocks.is_bridge("c", "b")
    assert not blocks.is_bridge("a", "c")
    assert blocks.impact("b") == 1
    assert blocks.component_size("a") == 3


def test_star_impact():
    blocks = graph_of("cwxyz", [("c", leaf) for leaf in "wxyz"])
    assert blocks.impact("c") == 3
    assert blocks.articulation_points() == {"c"}


def test_repeated_edge_changes_nothing():
    blocks = graph_of("abc", [("a", "b"), ("b", "c")])
    before = sorted(map(sorted, blocks.blocks()))
    blocks.insert_edge("a", "b")
    blocks.insert_edge("b", "a")
    assert sorted(map(sorted, blocks.blocks())) == before


def test_closing_a_cycle_merges_blocks():
    blocks = graph_of("abcde", [("a", "b"), ("b", "c"), ("c", "d"), ("d", "e")])
    assert blocks.articulation_points() == {"b", "c", "d"}
    blocks.insert_edge("e", "b")
    blocks.audit()
    assert blocks.articulation_points() == {"b"}
    assert sorted(map(sorted, blocks.blocks())) == [["a", "b"], ["b", "c", "d", "e"]]
    assert blocks.impact("b") == 1


def test_singleton_and_errors():
    blocks = graph_of("ab", [])
    assert not blocks.is_articulation("a")
    assert not blocks.connected("a", "b")
    with pytest.raises(SelfLoopError):
        blocks.insert_edge("a", "a")
    with pytest.raises(VertexNotFoundError):
        blocks.insert_edge("a", "zz")
    with pytest.raises(UnsupportedOperationError):
        blocks.delete_edge("a", "b")


def test_impact_is_local_to_the_component():
    blocks = graph_of("abcxy", [("a", "b"), ("b", "c"), ("x", "y")])
    assert blocks.impact("b") == 1
    assert blocks.num_components() == 2


@given(st.integers(2, 25), st.lists(st.tuples(st.integers(0, 24), st.integers(0, 24)),
                                     max_size=60))
@settings(max_examples=60, deadline=None)
def test_random_streams_match_static_recomputation(n, edges):
    fast = BlockForest()
    slow = ng.NaiveGraph()
    for v in range(n):
        fast.add_vertex(v)
        slow.add_vertex(v)
    for u, v in edges:
        u, v = u % n, v % n
        if u == v:
            continue
        fast.insert_edge(u, v)
        slow.insert_edge(u, v)
    fast.audit()

    assert fast.articulation_points() == ng.naive_articulations(slow)
    assert fast.bridges() == ng.naive_bridges(slow)
    assert sorted(map(sorted, fast.blocks())) == sorted(
        sorted(b) for b in ng.naive_blocks(slow)
    )
    for v in range(n):
        assert fast.impact(v) == ng.naive_impact(slow, v)
        assert fast.component_size(v) == ng.naive_component_size(slow, v)


class GraphMachine(RuleBasedStateMachine):
    """Vertex and edge insertions with per-step query agreement, errors included."""

    def __init__(self):
        super().__init__()
        self.fast = BlockForest(ForestConfig(audit_every=1))
        self.slow = ng.NaiveGraph()

    @rule(v=st.integers(0, 9))
    def add_vertex(self, v):
        same_outcome(lambda: self.fast.add_vertex(v), lambda: self.slow.add_vertex(v))

    @rule(u=st.integers(0, 9), v=st.integers(0, 9))
    def insert_edge(self, u, v):
        same_outcome(lambda: self.fast.insert_edge(u, v), lambda: self.slow.insert_edge(u, v))

    @rule(u=st.integers(0, 9), v=st.integers(0, 9))
    def pair_queries(self, u, v):
        same_outcome(
            lambda: self.fast.connected(u, v), lambda: ng.naive_connected(self.slow, u, v)
        )
        same_outcome(
            lambda: self.fast.is_bridge(u, v), lambda: ng.naive_is_bridge(self.slow, u, v)
        )

    @invariant()
    def blocks_agree(self):
        self.fast.audit()
        for v in self.fast.vertices():
            assert self.fast.is_articulation(v) == ng.naive_is_articulation(self.slow, v)
            assert self.fast.impact(v) == ng.naive_impact(self.slow, v)
        assert self.fast.num_components() == nx.number_connected_components(self.slow.graph)


GraphMachine.TestCase.settings = settings(max_examples=40, stateful_step_count=40, deadline=None)
TestGraphMachine = GraphMachine.TestCase
