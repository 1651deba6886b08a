"""Size/square pairs for counting paths through a vertex."""

from dataclasses import dataclass
from typing import Any

from dftree.parenseq.summaries import Monoid


@dataclass(frozen=True, slots=True)
class SizeSquarePair:
    """(Σ sizes, Σ squared sizes) over a run of child subtrees."""
    s: int = 0
    q: int = 0


ZERO_PAIR = SizeSquarePair()
UNIT_PAIR = SizeSquarePair(1, 1)


def merge_pairs(a: SizeSquarePair, b: SizeSquarePair) -> SizeSquarePair:
    """(a, a²) ⊕ (b, b²) = (a + b, (a + b)²): two pieces of one subtree."""
    s = a.s + b.s
    return SizeSquarePair(s, s * s)


def add_pairs(a: SizeSquarePair, b: SizeSquarePair) -> SizeSquarePair:
    return SizeSquarePair(a.s + b.s, a.q + b.q)


def unit_pair(record: Any) -> SizeSquarePair:
    return UNIT_PAIR


PAIR_MERGE = Monoid("size-square", merge_pairs, ZERO_PAIR)
PAIR_SUM = Monoid("pair-sum", add_pairs, ZERO_PAIR)
