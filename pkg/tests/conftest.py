"""Shared fixtures and helpers for the dftree tests."""

import pytest

from dftree.config.schema import ForestConfig
from dftree.errors import DFTreeError
from dftree.forest.forest import Forest


@pytest.fixture
def forest():
    """A forest that audits itself after every mutation."""
    return Forest(config=ForestConfig(audit_every=1))


def build_chain(forest: Forest, keys, weight=1) -> None:
    """Add ``keys`` as a path rooted at the first one."""
    for key in keys:
        forest.add_vertex(key, weight=weight)
    for parent, child in zip(keys, keys[1:]):
        forest.link(parent, child)


def build_star(forest: Forest, center, leaves) -> None:
    forest.add_vertex(center)
    for leaf in leaves:
        forest.add_vertex(leaf)
        forest.link(center, leaf)


def same_outcome(fast_call, slow_call):
    """Run the reference call, then require the fast call to agree, errors included."""
    try:
        expected = slow_call()
    except DFTreeError as e:
        with pytest.raises(type(e)):
            fast_call()
        return None
    got = fast_call()
    assert got == expected
    return got
