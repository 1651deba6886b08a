"""
Tests for operation scripts, sessions and the typer application.
"""

import json
from fractions import Fraction

import pytest
from typer.testing import CliRunner

from dftree import __version__
from dftree.cli import session as session_module
from dftree.cli.commands import EXIT_CHECK, EXIT_DIVERGED, EXIT_INPUT, EXIT_PARSE, app
from dftree.cli.script import Mode, parse_line, parse_script
from dftree.cli.session import (
    ForestSession,
    GraphSession,
    NaiveForestSession,
    format_answer,
    run_script,
)
from dftree.config.schema import Config
from dftree.errors import ScriptParseError, VerificationError

runner = CliRunner()


@pytest.fixture(autouse=True)
def isolated_home(tmp_path, monkeypatch):
    """Keep every test away from the real ~/.dftree."""
    monkeypatch.setenv("HOME", str(tmp_path))
    return tmp_path


def answers(text: str, mode: Mode = Mode.FOREST, verify: bool = True) -> list[str]:
    return list(run_script(parse_script(text, mode), Config(), verify=verify))


# ============================================================================
# Script parsing
# ============================================================================


def test_parse_line_arguments():
    command = parse_line(3, "link r x 2.5  # weighted", Mode.FOREST)
    assert command.name == "link"
    assert command.args == ("r", "x", 2.5)
    assert not command.query
    assert command.line_no == 3

    query = parse_line(1, "anc v 2", Mode.FOREST)
    assert query.query
    assert query.args == ("v", 2)
    assert parse_line(1, "   # only a comment", Mode.FOREST) is None
    assert parse_line(1, "vertex a", Mode.FOREST).args == ("a",)


@pytest.mark.parametrize(
    "line",
    ["bogus a", "link a", "setval a many", "anc a -1", "edge a b c"],
)
def test_parse_errors(line):
    with pytest.raises(ScriptParseError):
        parse_line(7, line, Mode.FOREST if not line.startswith("edge") else Mode.GRAPH)


def test_graph_commands_are_separate():
    with pytest.raises(ScriptParseError):
        parse_script("vertex a\nlink a b\n", Mode.GRAPH)
    script = parse_script("vertex a\n\nvertex b\nedge a b\nconn a b\n", Mode.GRAPH)
    assert len(script) == 4


def test_format_answer():
    assert format_answer(None) == "none"
    assert format_answer(True) == "true"
    assert format_answer(2.0) == "2"
    assert format_answer(0.1 + 0.2) == "0.3"
    assert format_answer(float("-inf")) == "-inf"
    assert format_answer(["a", "b"]) == "a b"
    assert format_answer([]) == ""
    assert format_answer(Fraction(0.1) + Fraction(0.2)) == "0.3"
    assert format_answer(Fraction(6, 2)) == "3"


# ============================================================================
# Sessions
# ============================================================================


def test_forest_examples():
    assert answers("vertex r\nvertex x\nlink r x\nparent x\n") == ["r"]
    assert answers("vertex s\nfarness s\n") == ["0"]


def test_graph_example():
    text = "vertex a\nvertex b\nvertex c\nedge a b\nedge b c\nimpact b\n"
    assert answers(text, Mode.GRAPH) == ["1"]


def test_errors_are_answers():
    text = "vertex a\nvertex a\nparent q\nlink a a\nroot a\n"
    assert answers(text) == ["error: duplicate-vertex", "error: unknown-vertex",
                             "error: cycle", "a"]


def test_forest_session_queries():
    text = "\n".join([
        "vertex a 1", "vertex b 2", "vertex c 3", "vertex d",
        "link a b 4", "link b c", "link a d 2",
        "children a", "depth c", "dist c d", "size a", "subsum b", "submax a",
        "maxchild a", "degree a", "lca c d", "desc c a", "same a d", "anc c 2",
        "bc b", "farness a",
        "setval b 10", "addpath c 1", "addsub b 5", "val a", "val b", "val c", "subsum a",
        "evert c", "root a", "parent b", "cut b", "same a c",
        "condense b", "root c", "erase a", "root d",
    ])
    assert answers(text) == [
        "d b", "3", "7", "4", "5", "3",
        "5", "2", "a", "true", "true", "a",
        "2", "11",
        "2", "16", "9", "14",
        "c", "c", "false",
        "c", "d",
    ]


def test_naive_session_matches_without_verification():
    text = "vertex a\nvertex b\nlink a b 3\ndist a b\nval b\nchildren b\n"
    fast = answers(text, verify=False)
    config = Config()
    slow = NaiveForestSession(config)
    expected = [slow.execute(c) for c in parse_script(text).commands]
    assert fast == [line for line in expected if line is not None]


def test_sessions_share_one_structure():
    config = Config()
    forest = ForestSession(config)
    assert forest.forest is forest.centrality.forest
    graph = GraphSession(config)
    assert len(graph.blocks) == 0


class WrongRoots(NaiveForestSession):
    def handlers(self):
        handlers = super().handlers()
        handlers["root"] = lambda v: "nobody"
        return handlers


def test_divergence_is_reported(monkeypatch):
    monkeypatch.setitem(
        session_module.SESSIONS, Mode.FOREST, (ForestSession, WrongRoots)
    )
    with pytest.raises(VerificationError) as info:
        answers("vertex a\nroot a\n")
    assert info.value.line_no == 2


# ============================================================================
# Command line
# ============================================================================


def test_version():
    result = runner.invoke(app, ["--version"])
    assert result.exit_code == 0
    assert __version__ in result.stdout


def test_run_reads_stdin():
    result = runner.invoke(
        app, ["run", "-", "--mode", "graph", "--verify"],
        input="vertex a\nvertex b\nvertex c\nedge a b\nedge b c\nimpact b\n",
    )
    assert result.exit_code == 0
    assert result.stdout.splitlines() == ["1"]


def test_run_writes_answers_to_file(isolated_home):
    script = isolated_home / "ops.txt"
    script.write_text("vertex r\nvertex x\nlink r x\nparent x\nroot x\n")
    out = isolated_home / "out" / "answers.txt"
    result = runner.invoke(app, ["run", str(script), "--out", str(out)])
    assert result.exit_code == 0
    assert out.read_text().splitlines() == ["r", "r"]


def test_run_parse_error_exit_code():
    result = runner.invoke(app, ["run", "-"], input="vertex a\nfly a\n")
    assert result.exit_code == EXIT_PARSE


def test_run_missing_script_exit_code(isolated_home):
    result = runner.invoke(app, ["run", str(isolated_home / "absent.txt")])
    assert result.exit_code == EXIT_INPUT
    assert not isinstance(result.exception, FileNotFoundError)


def test_run_divergence_exit_code(monkeypatch):
    monkeypatch.setitem(
        session_module.SESSIONS, Mode.FOREST, (ForestSession, WrongRoots)
    )
    result = runner.invoke(app, ["run", "-", "--verify"], input="vertex a\nroot a\n")
    assert result.exit_code == EXIT_DIVERGED


def test_init_and_config(isolated_home):
    result = runner.invoke(app, ["init"])
    assert result.exit_code == 0
    path = isolated_home / ".dftree" / "config.json"
    data = json.loads(path.read_text())
    assert data["forest"]["auditEvery"] == 0
    assert data["bench"]["maxExp"] == 17

    result = runner.invoke(app, ["init"], input="n\n")
    assert result.exit_code == 0

    result = runner.invoke(app, ["config"])
    assert result.exit_code == 0
    assert "float_digits" in result.stdout


def test_bench_command(isolated_home):
    out = isolated_home / "bench.json"
    result = runner.invoke(
        app, ["bench", "--min-exp", "3", "--max-exp", "4", "--ops", "30", "--out", str(out)]
    )
    assert result.exit_code == 0
    report = json.loads(out.read_text())
    assert report["profile"] == "query"
    assert [row["n"] for row in report["rows"]] == [8, 16]


def test_bench_check_fails_on_a_tiny_bound(isolated_home, monkeypatch):
    monkeypatch.setenv("DFTREE_BENCH__MAX_RATIO", "0")
    args = ["bench", "--min-exp", "3", "--max-exp", "5", "--ops", "30"]
    assert runner.invoke(app, args).exit_code == 0
    assert runner.invoke(app, [*args, "--check"]).exit_code == EXIT_CHECK
