"""Script sessions: the fast structures and their lockstep oracles."""

import math
from abc import ABC, abstractmethod
from fractions import Fraction
from typing import Any, Callable, Iterator

from loguru import logger

from dftree.blocks.block_forest import BlockForest
from dftree.centrality.tree_centrality import TreeCentrality
from dftree.config.schema import Config
from dftree.cli.script import Command, Mode, Script
from dftree.errors import DFTreeError, VerificationError
from dftree.oracle import naive_forest as nf
from dftree.oracle import naive_graph as ng


def format_answer(value: Any, float_digits: int = 12) -> str:
    """One output line per answer: ``none``, ``true``/``false``, ids or numbers."""
    if value is None:
        return "none"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (list, tuple)):
        return " ".join(format_answer(x, float_digits) for x in value)
    if isinstance(value, Fraction):
        value = float(value)
    if isinstance(value, float):
        if math.isfinite(value) and value == int(value):
            return str(int(value))
        return format(value, f".{float_digits}g")
    return str(value)


class Session(ABC):
    """
    Executes parsed commands against one structure.

    Subclasses register one handler per command name; updates answer None.
    """

    def __init__(self, config: Config):
        self.config = config
        self._handlers: dict[str, Callable[..., Any]] = self.handlers()

    @abstractmethod
    def handlers(self) -> dict[str, Callable[..., Any]]:
        pass

    def execute(self, command: Command) -> str | None:
        """Run a command; returns its output line, or None for a successful update."""
        try:
            value = self._handlers[command.name](*command.args)
        except DFTreeError as e:
            return f"error: {e.code}"
        if not command.query:
            return None
        return format_answer(value, self.config.cli.float_digits)


class ForestSession(Session):
    """Forest mode on a centrality-tracked forest."""

    def __init__(self, config: Config):
        self.centrality = TreeCentrality(config=config.forest)
        self.forest = self.centrality.forest
        super().__init__(config)

    def _set(self, v: str, x: Any) -> None:
        self.centrality.set_val(v, x)
        self.centrality.change_val(v, x)

    def handlers(self) -> dict[str, Callable[..., Any]]:
        c, f = self.centrality, self.forest
        return {
            "vertex": lambda v, val=0: c.add_vertex(v, val),
            "link": c.cc_link,
            "cut": c.cc_cut,
            "condense": c.cc_condense,
            "erase": c.cc_erase,
            "evert": c.cc_evert,
            "setval": self._set,
            "addpath": c.add_to_path,
            "addsub": c.add_to_subtree,
            "root": f.root,
            "parent": f.parent,
            "depth": f.depth,
            "size": f.subtree_size,
            "subsum": f.subtree_sum,
            "submax": f.subtree_max,
            "maxchild": f.maxsum_child,
            "degree": f.degree,
            "children": f.list_children,
            "val": f.get_effective_val,
            "lca": f.lca,
            "dist": f.weighted_distance,
            "desc": f.is_descendant,
            "same": f.same_tree,
            "anc": f.ancestor,
            "bc": c.betweenness,
            "farness": c.farness,
        }


class NaiveForestSession(Session):
    """Forest mode answered by the reference forest."""

    def __init__(self, config: Config):
        self.forest = nf.NaiveForest()
        super().__init__(config)

    def _link(self, u: str, v: str, w: Any = None) -> None:
        self.forest.link(u, v, self.config.forest.default_weight if w is None else w)

    def _set(self, v: str, x: Any) -> None:
        self.forest.set_val(v, x)
        self.forest.change_val(v, x)

    def _degree(self, v: str) -> int:
        return len(nf.naive_children(self.forest, v))

    def handlers(self) -> dict[str, Callable[..., Any]]:
        f = self.forest
        weight = self.config.forest.default_weight
        return {
            "vertex": lambda v, val=0: f.add_vertex(v, val, weight),
            "link": self._link,
            "cut": f.cut,
            "condense": f.condense,
            "erase": f.erase,
            "evert": f.evert,
            "setval": self._set,
            "addpath": f.add_to_path,
            "addsub": f.add_to_subtree,
            "root": lambda v: nf.naive_root(f, v),
            "parent": lambda v: nf.naive_parent(f, v),
            "depth": lambda v: nf.naive_depth(f, v),
            "size": lambda v: nf.naive_subtree_size(f, v),
            "subsum": lambda v: nf.naive_subtree_sum(f, v),
            "submax": lambda v: nf.naive_subtree_max(f, v),
            "maxchild": lambda v: nf.naive_maxsum_child(f, v),
            "degree": self._degree,
            "children": lambda v: nf.naive_children(f, v),
            "val": lambda v: nf.naive_effective_val(f, v),
            "lca": lambda u, v: nf.naive_lca(f, u, v),
            "dist": lambda u, v: nf.naive_distance(f, u, v),
            "desc": lambda u, v: nf.naive_is_descendant(f, u, v),
            "same": lambda u, v: nf.naive_same_tree(f, u, v),
            "anc": lambda v, k: nf.naive_ancestor(f, v, k),
            "bc": lambda v: nf.naive_betweenness(f, v),
            "farness": lambda v: nf.naive_farness(f, v),
        }


class GraphSession(Session):
    """Graph mode on a block forest."""

    def __init__(self, config: Config):
        self.blocks = BlockForest(config=config.forest)
        super().__init__(config)

    def handlers(self) -> dict[str, Callable[..., Any]]:
        b = self.blocks
        return {
            "vertex": b.add_vertex,
            "edge": b.insert_edge,
            "conn": b.connected,
            "artic": b.is_articulation,
            "bridge": b.is_bridge,
            "impact": b.impact,
            "compsize": b.component_size,
        }


class NaiveGraphSession(Session):
    """Graph mode answered by static lowpoint recomputation."""

    def __init__(self, config: Config):
        self.graph = ng.NaiveGraph()
        super().__init__(config)

    def handlers(self) -> dict[str, Callable[..., Any]]:
        g = self.graph
        return {
            "vertex": g.add_vertex,
            "edge": g.insert_edge,
            "conn": lambda u, v: ng.naive_connected(g, u, v),
            "artic": lambda v: ng.naive_is_articulation(g, v),
            "bridge": lambda u, v: ng.naive_is_bridge(g, u, v),
            "impact": lambda v: ng.naive_impact(g, v),
            "compsize": lambda v: ng.naive_component_size(g, v),
        }


SESSIONS: dict[Mode, tuple[type[Session], type[Session]]] = {
    Mode.FOREST: (ForestSession, NaiveForestSession),
    Mode.GRAPH: (GraphSession, NaiveGraphSession),
}


def run_script(script: Script, config: Config, verify: bool = False) -> Iterator[str]:
    """
    Yield the output lines of a script.

    With ``verify`` the oracle session replays every command in lockstep and
    every ``cli.verify_every``-th query answer is compared.

    Raises:
        VerificationError: On the first compared answer that differs.
    """
    fast_cls, oracle_cls = SESSIONS[script.mode]
    fast = fast_cls(config)
    oracle = oracle_cls(config) if verify else None
    every = max(1, config.cli.verify_every)
    queries = 0
    logger.info(f"running {len(script)} {script.mode.value} commands (verify={verify})")

    for command in script.commands:
        answer = fast.execute(command)
        if oracle is not None:
            expected = oracle.execute(command)
            checked = True
            if command.query:
                queries += 1
                checked = queries % every == 0
            if checked and answer != expected:
                raise VerificationError(
                    command.line_no, command.text, str(answer), str(expected)
                )
        if answer is not None:
            yield answer
