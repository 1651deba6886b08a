"""
Every rooted ordered forest on up to six vertices, every query, against the reference forest.
"""

import itertools
import operator

import pytest
from conftest import same_outcome

from dftree.forest.forest import Forest
from dftree.oracle import naive_forest as nf


def parent_choices(n: int):
    """Vertex i hangs under some j < i or starts a new tree (None)."""
    return itertools.product(*[[None, *range(i)] for i in range(n)])


def build_both(parents):
    fast, slow = Forest(), nf.NaiveForest()
    for i, p in enumerate(parents):
        val = 3 * i - 7
        fast.add_vertex(i, val, weight=i + 1)
        slow.add_vertex(i, val, i + 1)
        if p is not None:
            fast.link(p, i)
            slow.link(p, i)
    return fast, slow


@pytest.mark.parametrize("n", range(1, 7))
def test_all_small_forests(n):
    for parents in parent_choices(n):
        fast, slow = build_both(parents)
        for v in range(n):
            assert fast.root(v) == nf.naive_root(slow, v)
            assert fast.parent(v) == nf.naive_parent(slow, v)
            assert fast.depth(v) == nf.naive_depth(slow, v)
            assert fast.list_children(v) == nf.naive_children(slow, v)
            assert fast.subtree_sum(v) == nf.naive_subtree_sum(slow, v)
            assert fast.subtree_max(v) == nf.naive_subtree_max(slow, v)
            assert fast.maxsum_child(v) == nf.naive_maxsum_child(slow, v)
            assert fast.children_sum(v) == nf.naive_reduce_children(slow, v, operator.add, 0)
            assert fast.children_max(v) == nf.naive_reduce_children(
                slow, v, max, float("-inf")
            )
            assert fast.combine(v) == nf.naive_combine(slow, v)
            for k in range(n + 1):
                assert fast.ancestor(v, k) == nf.naive_ancestor(slow, v, k)
        for u, v in itertools.product(range(n), repeat=2):
            assert fast.same_tree(u, v) == nf.naive_same_tree(slow, u, v)
            assert fast.is_descendant(u, v) == nf.naive_is_descendant(slow, u, v)
            same_outcome(lambda: fast.lca(u, v), lambda: nf.naive_lca(slow, u, v))
            same_outcome(
                lambda: fast.weighted_distance(u, v), lambda: nf.naive_distance(slow, u, v)
            )
        fast.audit()


@pytest.mark.parametrize("n", range(2, 6))
def test_every_evert_of_small_trees(n):
    for parents in parent_choices(n):
        if any(p is None for p in parents[1:]):
            continue
        for v in range(n):
            fast, slow = build_both(parents)
            fast.evert(v)
            slow.evert(v)
            fast.audit()
            for x in range(n):
                assert fast.parent(x) == nf.naive_parent(slow, x)
                assert fast.list_children(x) == nf.naive_children(slow, x)
                assert fast.subtree_moment(x) == nf.naive_down_dists(slow, x)
