"""Standard monoids and value sources for forest aggregations."""

import math
import operator
from typing import Any

from dftree.parenseq.summaries import Monoid

SUM = Monoid("sum", operator.add, 0, operator.neg)
MAX = Monoid("max", max, -math.inf)
MIN = Monoid("min", min, math.inf)


def by_val(record: Any) -> Any:
    """The vertex's reduction payload."""
    return record.val


def unit(record: Any) -> int:
    return 1


def by_weight(record: Any) -> Any:
    """The weight of the edge from the vertex to its parent."""
    return record.weight
