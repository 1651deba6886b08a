"""Line-oriented operation scripts."""

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Callable

from dftree.errors import ScriptParseError


class Mode(str, Enum):
    FOREST = "forest"
    GRAPH = "graph"


def parse_id(token: str) -> str:
    return token


def parse_number(token: str) -> int | float:
    """Integers stay exact; anything else must parse as a float."""
    try:
        return int(token)
    except ValueError:
        pass
    try:
        return float(token)
    except ValueError:
        raise ValueError(f"expected a number, got {token!r}") from None


def parse_count(token: str) -> int:
    value = int(token)
    if value < 0:
        raise ValueError(f"expected a non-negative integer, got {token!r}")
    return value


Parser = Callable[[str], Any]


@dataclass(frozen=True)
class Signature:
    """Argument parsers of a command; the trailing ``optional`` ones may be omitted."""
    parsers: tuple[Parser, ...]
    optional: int = 0
    query: bool = False


ID, NUM, COUNT = parse_id, parse_number, parse_count

FOREST_COMMANDS: dict[str, Signature] = {
    "vertex": Signature((ID, NUM), optional=1),
    "link": Signature((ID, ID, NUM), optional=1),
    "cut": Signature((ID,)),
    "condense": Signature((ID,)),
    "erase": Signature((ID,)),
    "evert": Signature((ID,)),
    "setval": Signature((ID, NUM)),
    "addpath": Signature((ID, NUM)),
    "addsub": Signature((ID, NUM)),
    **{
        name: Signature((ID,), query=True)
        for name in (
            "root", "parent", "depth", "size", "subsum", "submax",
            "maxchild", "degree", "children", "val", "bc", "farness",
        )
    },
    **{name: Signature((ID, ID), query=True) for name in ("lca", "dist", "desc", "same")},
    "anc": Signature((ID, COUNT), query=True),
}

GRAPH_COMMANDS: dict[str, Signature] = {
    "vertex": Signature((ID,)),
    "edge": Signature((ID, ID)),
    "conn": Signature((ID, ID), query=True),
    "artic": Signature((ID,), query=True),
    "bridge": Signature((ID, ID), query=True),
    "impact": Signature((ID,), query=True),
    "compsize": Signature((ID,), query=True),
}

COMMANDS = {Mode.FOREST: FOREST_COMMANDS, Mode.GRAPH: GRAPH_COMMANDS}


@dataclass(frozen=True)
class Command:
    line_no: int
    name: str
    args: tuple[Any, ...]
    query: bool
    text: str


@dataclass
class Script:
    mode: Mode
    commands: list[Command] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.commands)


def parse_line(line_no: int, raw: str, mode: Mode) -> Command | None:
    """Parse one line; blank lines and ``#`` comments give None."""
    text = raw.split("#", 1)[0].strip()
    if not text:
        return None
    name, *tokens = text.split()
    signature = COMMANDS[mode].get(name)
    if signature is None:
        raise ScriptParseError(line_no, f"unknown {mode.value} command {name!r}")
    most = len(signature.parsers)
    least = most - signature.optional
    if not least <= len(tokens) <= most:
        expected = str(most) if least == most else f"{least}-{most}"
        raise ScriptParseError(line_no, f"{name} takes {expected} arguments, got {len(tokens)}")
    try:
        args = tuple(parse(token) for parse, token in zip(signature.parsers, tokens))
    except ValueError as e:
        raise ScriptParseError(line_no, str(e)) from None
    return Command(line_no, name, args, signature.query, text)


def parse_script(text: str, mode: Mode = Mode.FOREST) -> Script:
    script = Script(Mode(mode))
    for line_no, raw in enumerate(text.splitlines(), start=1):
        command = parse_line(line_no, raw, script.mode)
        if command is not None:
            script.commands.append(command)
    return script
