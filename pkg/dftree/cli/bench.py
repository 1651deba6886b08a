"""Reproducible random workloads timed at geometrically growing forest sizes."""

import random
import time
from dataclasses import asdict, dataclass, field
from enum import Enum
from statistics import fmean
from typing import Any

from loguru import logger

from dftree.config.schema import BenchConfig, ForestConfig
from dftree.forest.forest import Forest
from dftree.forest.types import RootedTree


class Profile(str, Enum):
    QUERY = "query"
    LINK_CUT = "link-cut"
    EVERT = "evert"


QUERY_KINDS = ("root", "parent", "lca", "depth", "subtree_sum", "degree", "same_tree")


@dataclass
class BenchRow:
    n: int
    ops: int
    seconds: float

    @property
    def per_op_us(self) -> float:
        return 1e6 * self.seconds / self.ops if self.ops else 0.0


@dataclass
class BenchReport:
    profile: str
    seed: int
    rows: list[BenchRow] = field(default_factory=list)

    @property
    def ratios(self) -> list[float]:
        return growth_ratios(self.rows)

    @property
    def mean_ratio(self) -> float:
        return fmean(self.ratios) if self.ratios else 0.0

    def to_dict(self) -> dict[str, Any]:
        data = asdict(self)
        for row, raw in zip(self.rows, data["rows"]):
            raw["per_op_us"] = row.per_op_us
        data["ratios"] = self.ratios
        data["mean_ratio"] = self.mean_ratio
        return data


def growth_ratios(rows: list[BenchRow]) -> list[float]:
    """time(2n)/time(n) per op for each consecutive pair of sizes."""
    return [b.per_op_us / a.per_op_us for a, b in zip(rows, rows[1:]) if a.per_op_us > 0]


def scaling_ok(report: BenchReport, config: BenchConfig) -> bool:
    """Whether the measured growth matches the profile's expected cost.

    Query and link-cut ops must stay within ``max_ratio``. Everts cost O(d log n),
    so over the sizes whose paths still double (n <= evert_depth) they must exceed it.
    """
    if report.profile != Profile.EVERT.value:
        return report.mean_ratio <= config.max_ratio
    deep = growth_ratios([row for row in report.rows if row.n <= config.evert_depth])
    return bool(deep) and fmean(deep) > config.max_ratio


def random_tree(n: int, rng: random.Random, offset: int = 0) -> RootedTree:
    """Random recursive tree on ids offset..offset+n-1 rooted at ``offset``."""
    tree = RootedTree(offset)
    for i in range(1, n):
        tree.parent[offset + i] = offset + rng.randrange(i)
    return tree


def path_tree(n: int, offset: int = 0) -> RootedTree:
    tree = RootedTree(offset)
    for i in range(1, n):
        tree.parent[offset + i] = offset + i - 1
    return tree


def generate_workload(profile: Profile, n: int, ops: int, seed: int) -> list[tuple]:
    """Operation picks for one size; the same arguments always give the same list."""
    rng = random.Random(seed * 1_000_003 + n)
    if profile is Profile.QUERY:
        return [
            (rng.choice(QUERY_KINDS), rng.randrange(n), rng.randrange(n)) for _ in range(ops)
        ]
    return [(rng.randrange(n), rng.randrange(n)) for _ in range(ops)]


def build_forest(profile: Profile, n: int, seed: int, evert_depth: int) -> Forest:
    forest = Forest(config=ForestConfig(audit_every=0))
    rng = random.Random(seed)
    if profile is Profile.EVERT:
        for offset in range(0, n, evert_depth):
            forest.import_tree(path_tree(min(evert_depth, n - offset), offset))
    else:
        forest.import_tree(random_tree(n, rng))
    return forest


def _run_queries(forest: Forest, workload: list[tuple]) -> None:
    for kind, a, b in workload:
        if kind == "lca":
            forest.lca(a, b)
        elif kind == "same_tree":
            forest.same_tree(a, b)
        else:
            getattr(forest, kind)(a)


def _run_link_cut(forest: Forest, workload: list[tuple]) -> None:
    for v, u in workload:
        p = forest.parent(v)
        if p is None:
            continue
        forest.cut(v)
        forest.link(p if forest.same_tree(u, v) else u, v)


def _run_everts(forest: Forest, workload: list[tuple]) -> None:
    for v, _ in workload:
        forest.evert(v)


RUNNERS = {
    Profile.QUERY: _run_queries,
    Profile.LINK_CUT: _run_link_cut,
    Profile.EVERT: _run_everts,
}


def run_bench(
    profile: Profile,
    config: BenchConfig,
    seed: int | None = None,
    min_exp: int | None = None,
    max_exp: int | None = None,
    ops: int | None = None,
) -> BenchReport:
    """Time ``ops`` operations of a profile at n = 2^min_exp .. 2^max_exp."""
    seed = config.seed if seed is None else seed
    lo = config.min_exp if min_exp is None else min_exp
    hi = config.max_exp if max_exp is None else max_exp
    ops = config.ops if ops is None else ops
    if profile is Profile.EVERT:
        ops = min(ops, config.evert_ops)

    report = BenchReport(profile.value, seed)
    for exp in range(lo, hi + 1):
        n = 2**exp
        forest = build_forest(profile, n, seed, config.evert_depth)
        workload = generate_workload(profile, n, ops, seed)
        start = time.perf_counter()
        RUNNERS[profile](forest, workload)
        row = BenchRow(n, ops, time.perf_counter() - start)
        report.rows.append(row)
        logger.info(f"{profile.value} n={n}: {row.per_op_us:.2f} us/op")
    return report
