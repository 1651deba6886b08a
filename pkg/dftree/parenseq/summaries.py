"""Monoid summaries folded over ranges of a parenthesis sequence."""

from dataclasses import dataclass
from functools import reduce
from typing import Any, Callable, Iterable


@dataclass(frozen=True)
class Monoid:
    """An associative operation with its identity and, optionally, its inverse."""
    name: str
    op: Callable[[Any, Any], Any]
    identity: Any
    inverse: Callable[[Any], Any] | None = None

    def fold(self, values: Iterable[Any]) -> Any:
        return reduce(self.op, values, self.identity)


# ---------------------------------------------------------------------------
# Depth summary
# ---------------------------------------------------------------------------


@dataclass(frozen=True, slots=True)
class DepthSummary:
    """(down, up): minimum prefix depth (capped at 0) and final depth minus it."""
    down: int = 0
    up: int = 0

    @property
    def final_depth(self) -> int:
        return self.down + self.up


EMPTY_DEPTH = DepthSummary(0, 0)
OPEN_DEPTH = DepthSummary(0, 1)
CLOSE_DEPTH = DepthSummary(-1, 0)


def concat_depth(a: DepthSummary, b: DepthSummary) -> DepthSummary:
    k = a.up + b.down
    if k >= 0:
        return DepthSummary(a.down, k + b.up)
    return DepthSummary(a.down + k, b.up)


# ---------------------------------------------------------------------------
# Lca summary
# ---------------------------------------------------------------------------


@dataclass(frozen=True, slots=True)
class LcaSummary:
    """Depth summary plus the leftmost element of minimal depth.

    ``leftmost_min`` is None when every element of the range ends at a
    strictly positive relative depth (including the empty range).
    """
    summary: DepthSummary = EMPTY_DEPTH
    leftmost_min: Any = None


EMPTY_LCA = LcaSummary()
OPEN_LCA = LcaSummary(OPEN_DEPTH, None)


def concat_lca(a: LcaSummary, b: LcaSummary) -> LcaSummary:
    sa, sb = a.summary, b.summary
    k = sa.up + sb.down
    if k < 0:
        handle = b.leftmost_min
    elif a.leftmost_min is not None:
        handle = a.leftmost_min
    elif k == 0:
        handle = b.leftmost_min
    else:
        handle = None
    return LcaSummary(concat_depth(sa, sb), handle)


# ---------------------------------------------------------------------------
# Reduce-children summary
# ---------------------------------------------------------------------------


@dataclass(frozen=True, slots=True)
class RcSummary:
    """Prefix/body/suffix decomposition of a range with the body's children folded.

    The prefix ends where the minimal depth is first reached, the suffix starts
    where it is last reached; the body in between is a run of balanced subtrees
    whose root values are ⊕-folded into ``body``. ``suffix_info`` is the value of
    the suffix's first node (None when the suffix is empty).
    """
    prefix_depth: int
    body: Any
    suffix_depth: int
    suffix_info: Any = None


def rc_identity(plus: Monoid) -> RcSummary:
    return RcSummary(0, plus.identity, 0, None)


def concat_rc(a: RcSummary, b: RcSummary, plus: Monoid) -> RcSummary:
    k = a.suffix_depth + b.prefix_depth
    if k > 0:
        return RcSummary(a.prefix_depth, a.body, k + b.suffix_depth, a.suffix_info)
    if k < 0:
        return RcSummary(a.prefix_depth + k, b.body, b.suffix_depth, b.suffix_info)
    body = a.body
    if a.suffix_depth > 0:
        # b closes the subtree opened by a's first suffix node
        body = plus.op(body, a.suffix_info)
    return RcSummary(a.prefix_depth, plus.op(body, b.body), b.suffix_depth, b.suffix_info)


# ---------------------------------------------------------------------------
# Reduce-child-subtrees summary
# ---------------------------------------------------------------------------


@dataclass(frozen=True, slots=True)
class RcsSummary:
    """Like RcSummary but also ⊗-folding the ⊕-total of every body subtree."""
    prefix_depth: int
    prefix_plus: Any
    body_plus: Any
    body_times: Any
    suffix_plus: Any
    suffix_depth: int

    def total(self, plus: Monoid) -> Any:
        return plus.op(plus.op(self.prefix_plus, self.body_plus), self.suffix_plus)


def rcs_identity(plus: Monoid, times: Monoid) -> RcsSummary:
    return RcsSummary(0, plus.identity, plus.identity, times.identity, plus.identity, 0)


def concat_rcs(a: RcsSummary, b: RcsSummary, plus: Monoid, times: Monoid) -> RcsSummary:
    p = plus.op
    k = a.suffix_depth + b.prefix_depth
    if k > 0:
        suffix = p(p(p(a.suffix_plus, b.prefix_plus), b.body_plus), b.suffix_plus)
        return RcsSummary(
            a.prefix_depth, a.prefix_plus, a.body_plus, a.body_times, suffix, k + b.suffix_depth
        )
    if k < 0:
        prefix = p(p(p(a.prefix_plus, a.body_plus), a.suffix_plus), b.prefix_plus)
        return RcsSummary(
            a.prefix_depth + k, prefix, b.body_plus, b.body_times, b.suffix_plus, b.suffix_depth
        )
    if a.suffix_depth > 0:
        closed = p(a.suffix_plus, b.prefix_plus)
        body_plus = p(p(a.body_plus, closed), b.body_plus)
        body_times = times.op(times.op(a.body_times, closed), b.body_times)
    else:
        body_plus = p(a.body_plus, b.body_plus)
        body_times = times.op(a.body_times, b.body_times)
    return RcsSummary(
        a.prefix_depth, a.prefix_plus, body_plus, body_times, b.suffix_plus, b.suffix_depth
    )


# ---------------------------------------------------------------------------
# Weighted depth moment
# ---------------------------------------------------------------------------


@dataclass(frozen=True, slots=True)
class MomentSummary:
    """Open count, weight total, and Σ over Open nodes of the inclusive prefix weight."""
    count: int = 0
    total: float = 0
    moment: float = 0


EMPTY_MOMENT = MomentSummary()


def concat_moment(a: MomentSummary, b: MomentSummary) -> MomentSummary:
    return MomentSummary(
        a.count + b.count,
        a.total + b.total,
        a.moment + b.moment + b.count * a.total,
    )
