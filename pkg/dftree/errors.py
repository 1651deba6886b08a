"""Exception hierarchy for dftree."""

from typing import Any


class DFTreeError(Exception):
    """Base class for every error raised by dftree."""

    code = "error"


class InvalidHandleError(DFTreeError):
    """A sequence node was used after it was erased."""

    code = "stale-handle"


class VertexNotFoundError(DFTreeError, KeyError):
    code = "unknown-vertex"

    def __init__(self, key: Any):
        super().__init__(f"unknown vertex {key!r}")
        self.key = key

    def __str__(self) -> str:
        return self.args[0]


class DuplicateVertexError(DFTreeError):
    code = "duplicate-vertex"

    def __init__(self, key: Any):
        super().__init__(f"vertex {key!r} already exists")
        self.key = key


class CycleError(DFTreeError):
    """Linking two vertices of the same tree."""

    code = "cycle"


class NotRootError(DFTreeError):
    """The child side of a link is not the root of its tree."""

    code = "not-root"


class DifferentTreesError(DFTreeError):
    code = "different-trees"


class SequenceMismatchError(DFTreeError):
    """Two handles that must share a sequence do not."""

    code = "different-sequences"


class InvalidTreeError(DFTreeError):
    """An imported parent map has cycles, several parents, or dangling ids."""

    code = "invalid-tree"


class AggregationNotRegisteredError(DFTreeError):
    code = "not-registered"

    def __init__(self, name: str):
        super().__init__(f"aggregation {name!r} is not registered on this forest")
        self.name = name


class ForestLockedError(DFTreeError):
    """Raw mutation of a forest owned by a maintenance layer."""

    code = "locked"


class SelfLoopError(DFTreeError):
    code = "self-loop"


class UnsupportedOperationError(DFTreeError):
    code = "unsupported"


class UndefinedValueError(DFTreeError):
    code = "undefined"


class AuditError(DFTreeError):
    code = "audit"


class ScriptParseError(DFTreeError):
    code = "parse"

    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


class VerificationError(DFTreeError):
    """The fast session and the oracle disagreed."""

    code = "diverged"

    def __init__(self, line_no: int, command: str, got: str, expected: str):
        super().__init__(
            f"line {line_no}: {command!r} answered {got!r}, oracle says {expected!r}"
        )
        self.line_no = line_no
        self.got = got
        self.expected = expected
