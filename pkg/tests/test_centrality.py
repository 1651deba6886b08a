"""
Tests for dynamic betweenness and closeness on weighted forests.
"""

import itertools
import random

import pytest
from conftest import same_outcome
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.stateful import RuleBasedStateMachine, invariant, rule

from dftree.centrality import LCA_MASS, SizeSquarePair, TreeCentrality
from dftree.centrality.pairs import PAIR_MERGE, PAIR_SUM, UNIT_PAIR
from dftree.config.schema import ForestConfig
from dftree.errors import AuditError, ForestLockedError, UndefinedValueError
from dftree.oracle import naive_forest as nf


@pytest.fixture
def cc():
    return TreeCentrality(config=ForestConfig(audit_every=1))


def path_abc(cc, w=1):
    for v in "abc":
        cc.add_vertex(v)
    cc.cc_link("a", "b", w)
    cc.cc_link("b", "c", w)


def test_pair_monoids():
    two = PAIR_MERGE.op(UNIT_PAIR, UNIT_PAIR)
    assert two == SizeSquarePair(2, 4)
    assert PAIR_SUM.op(two, SizeSquarePair(3, 9)) == SizeSquarePair(5, 13)
    assert PAIR_MERGE.op(PAIR_MERGE.identity, two) == two


def test_path_betweenness_and_farness(cc):
    path_abc(cc)
    assert cc.betweenness("b") == 1
    assert cc.betweenness("a") == 0
    assert cc.farness("b") == 2
    assert cc.farness("a") == 3
    assert cc.closeness("a") == pytest.approx(1 / 3)
    assert cc.down_dists("a") == 3
    assert cc.up_dists("c") == 3


def test_star_betweenness(cc):
    cc.add_vertex("hub")
    for leaf in "vwxyz":
        cc.add_vertex(leaf)
        cc.cc_link("hub", leaf)
    assert cc.betweenness("hub") == 10
    assert cc.betweenness("v") == 0
    cc.cc_evert("x")
    assert cc.betweenness("hub") == 10
    assert cc.farness("x") == 1 + 4 * 2


def test_singleton_closeness_is_undefined(cc):
    cc.add_vertex("s")
    assert cc.farness("s") == 0
    with pytest.raises(UndefinedValueError):
        cc.closeness("s")


def test_single_weighted_edge(cc):
    cc.add_vertex("u")
    cc.add_vertex("v")
    cc.cc_link("u", "v", 7)
    assert cc.farness("u") == 7
    assert cc.farness("v") == 7


def test_link_then_cut_restores_farness(cc):
    path_abc(cc, w=2)
    cc.add_vertex("d")
    cc.add_vertex("e")
    cc.cc_link("d", "e", 3)
    before = cc.farness_all()
    cc.cc_link("b", "d", 5)
    assert cc.farness("e") == 3 + 8 + 10 + 10
    cc.cc_cut("d")
    assert cc.farness_all() == before


def test_condense_and_erase(cc):
    path_abc(cc, w=2)
    cc.cc_condense("b")
    assert cc.farness("a") == 2
    assert cc.farness("c") == 2
    cc.cc_erase("c")
    assert cc.farness("a") == 0


def test_forest_is_locked(cc):
    cc.add_vertex("a")
    cc.add_vertex("b")
    with pytest.raises(ForestLockedError):
        cc.forest.link("a", "b")
    with pytest.raises(ForestLockedError):
        cc.add_to_subtree("a", 1, quantity=LCA_MASS)
    cc.add_to_subtree("a", 1)
    assert cc.forest.get_effective_val("a") == 1


class CentralityMachine(RuleBasedStateMachine):
    """Structural operations on a weighted forest; farness and betweenness agree everywhere."""

    def __init__(self):
        super().__init__()
        self.fast = TreeCentrality(config=ForestConfig(audit_every=1))
        self.slow = nf.NaiveForest()

    @rule(key=st.integers(0, 9))
    def add_vertex(self, key):
        same_outcome(
            lambda: self.fast.add_vertex(key), lambda: self.slow.add_vertex(key)
        )

    @rule(u=st.integers(0, 9), v=st.integers(0, 9), w=st.integers(1, 9))
    def link(self, u, v, w):
        same_outcome(lambda: self.fast.cc_link(u, v, w), lambda: self.slow.link(u, v, w))

    @rule(v=st.integers(0, 9))
    def cut(self, v):
        same_outcome(lambda: self.fast.cc_cut(v), lambda: self.slow.cut(v))

    @rule(v=st.integers(0, 9))
    def condense(self, v):
        same_outcome(lambda: self.fast.cc_condense(v), lambda: self.slow.condense(v))

    @rule(v=st.integers(0, 9))
    def erase(self, v):
        same_outcome(lambda: self.fast.cc_erase(v), lambda: self.slow.erase(v))

    @rule(v=st.integers(0, 9))
    def evert(self, v):
        same_outcome(lambda: self.fast.cc_evert(v), lambda: self.slow.evert(v))

    @invariant()
    def centrality_agrees(self):
        for v in self.fast.forest.vertices():
            assert self.fast.farness(v) == nf.naive_farness(self.slow, v)
            assert self.fast.down_dists(v) == nf.naive_down_dists(self.slow, v)
            assert self.fast.betweenness(v) == nf.naive_betweenness(self.slow, v)


CentralityMachine.TestCase.settings = settings(
    max_examples=40, stateful_step_count=40, deadline=None
)
TestCentralityMachine = CentralityMachine.TestCase


@given(
    st.lists(st.tuples(st.integers(0, 10**6), st.integers(1, 9)), min_size=1, max_size=25),
    st.booleans(),
)
@settings(max_examples=50, deadline=None)
def test_sum_rules_on_random_trees(edges, fractional):
    cc = TreeCentrality()
    cc.add_vertex(0)
    for i, (pick, w) in enumerate(edges, start=1):
        cc.add_vertex(i)
        cc.cc_link(pick % i, i, w / 10 if fractional else w)
    n = len(edges) + 1
    pairs = list(itertools.combinations(range(n), 2))

    hops = sum(cc.forest.distance(u, v) - 1 for u, v in pairs)
    assert sum(cc.betweenness(v) for v in range(n)) == hops

    total = sum(cc.forest.weighted_distance(u, v) for u, v in pairs)
    assert sum(cc.farness_all().values()) == pytest.approx(2 * float(total), rel=1e-9)


def test_odd_cross_pairs_fail_the_audit(cc, monkeypatch):
    path_abc(cc)
    assert cc.betweenness("b") == 1
    monkeypatch.setattr(
        cc.forest, "reduce_child_subtrees", lambda v, name: SizeSquarePair(3, 4)
    )
    with pytest.raises(AuditError):
        cc.betweenness("b")


def rebuilt(slow):
    """A fresh TreeCentrality holding the same weighted forest as ``slow``."""
    cc = TreeCentrality()
    for v in slow.children:
        cc.add_vertex(v)
    stack = [v for v in slow.children if v not in slow.parent]
    while stack:
        p = stack.pop()
        for c in slow.children[p]:
            cc.cc_link(p, c, slow.weights[c])
            stack.append(c)
    return cc


def assert_farness_matches(fast, slow):
    expected = {v: nf.naive_farness(slow, v) for v in slow.children}
    fresh = rebuilt(slow).farness_all()
    got = fast.farness_all()
    assert got.keys() == expected.keys()
    for v, far in expected.items():
        assert got[v] == pytest.approx(far, rel=1e-9, abs=1e-9)
        assert fresh[v] == pytest.approx(far, rel=1e-9, abs=1e-9)


def test_non_dyadic_weights_do_not_drift():
    rng = random.Random(20241018)
    weights = (0.1, 0.3, 1.7, 2.9, 1000.1)
    fast = TreeCentrality(config=ForestConfig(audit_every=97))
    slow = nf.NaiveForest()
    next_key = 0
    for step in range(1500):
        keys = list(slow.children)
        if len(keys) < 6 or rng.random() < 0.1:
            same_outcome(lambda: fast.add_vertex(next_key), lambda: slow.add_vertex(next_key))
            next_key += 1
            continue
        op = rng.choice(("link", "link", "cut", "evert", "condense"))
        v = rng.choice(keys)
        if op == "link":
            u, w = rng.choice(keys), rng.choice(weights)
            same_outcome(lambda: fast.cc_link(u, v, w), lambda: slow.link(u, v, w))
        elif op == "cut":
            same_outcome(lambda: fast.cc_cut(v), lambda: slow.cut(v))
        elif op == "evert":
            same_outcome(lambda: fast.cc_evert(v), lambda: slow.evert(v))
        else:
            same_outcome(lambda: fast.cc_condense(v), lambda: slow.condense(v))
        if step % 100 == 99:
            assert_farness_matches(fast, slow)
    assert_farness_matches(fast, slow)
