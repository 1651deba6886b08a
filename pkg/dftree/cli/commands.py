"""CLI commands for dftree."""

import json
import sys
from pathlib import Path

import typer
from loguru import logger
from rich.console import Console
from rich.markup import escape
from rich.table import Table

from dftree import __logo__, __version__
from dftree.cli.bench import Profile, run_bench, scaling_ok
from dftree.cli.script import Mode, parse_script
from dftree.cli.session import run_script
from dftree.errors import ScriptParseError, VerificationError
from dftree.utils.helpers import write_text

app = typer.Typer(
    name="dftree",
    help=f"{__logo__} dftree - dynamic forests on depth first tours",
    no_args_is_help=True,
)

console = Console()
err_console = Console(stderr=True)

EXIT_PARSE = 1
EXIT_DIVERGED = 2
EXIT_INPUT = 3
EXIT_CHECK = 4


def _configure_logging(enabled: bool) -> None:
    if enabled:
        logger.enable("dftree")
    else:
        logger.disable("dftree")


def version_callback(value: bool):
    if value:
        console.print(f"{__logo__} dftree v{__version__}")
        raise typer.Exit()


@app.callback()
def main(
    version: bool = typer.Option(
        None, "--version", "-v", callback=version_callback, is_eager=True
    ),
):
    """dftree - dynamic forests on depth first tours."""
    pass


# ============================================================================
# Run
# ============================================================================


@app.command()
def run(
    script: str = typer.Argument(..., help="Script file, or - for standard input"),
    mode: Mode = typer.Option(Mode.FOREST, "--mode", "-m", help="Session kind"),
    verify: bool = typer.Option(False, "--verify", help="Check every answer against the oracle"),
    out: Path | None = typer.Option(None, "--out", "-o", help="Write answers to a file"),
    logs: bool = typer.Option(False, "--logs", help="Show dftree debug logs"),
):
    """Run an operation script and print one line per query."""
    from dftree.config.loader import load_config

    _configure_logging(logs)
    config = load_config()
    try:
        text = sys.stdin.read() if script == "-" else Path(script).read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as e:
        err_console.print(f"[red]Cannot read script:[/red] {escape(str(e))}")
        raise typer.Exit(EXIT_INPUT)

    try:
        parsed = parse_script(text, mode)
    except ScriptParseError as e:
        err_console.print(f"[red]Parse error:[/red] {e}")
        raise typer.Exit(EXIT_PARSE)

    answers: list[str] = []
    try:
        for answer in run_script(parsed, config, verify=verify):
            if out is None:
                typer.echo(answer)
            else:
                answers.append(answer)
    except VerificationError as e:
        err_console.print(f"[red]Diverged:[/red] {e}")
        raise typer.Exit(EXIT_DIVERGED)
    finally:
        if out is not None:
            write_text(out, "".join(f"{line}\n" for line in answers))


# ============================================================================
# Bench
# ============================================================================


@app.command()
def bench(
    profile: Profile = typer.Option(Profile.QUERY, "--profile", "-p", help="Workload profile"),
    seed: int | None = typer.Option(None, "--seed", "-s", help="Random seed"),
    min_exp: int | None = typer.Option(None, "--min-exp", help="Smallest size is 2^min_exp"),
    max_exp: int | None = typer.Option(None, "--max-exp", help="Largest size is 2^max_exp"),
    ops: int | None = typer.Option(None, "--ops", help="Operations per size"),
    out: Path | None = typer.Option(None, "--out", "-o", help="Write the report as JSON"),
    check: bool = typer.Option(
        False, "--check", help="Exit nonzero when the growth ratio misses the profile's bound"
    ),
    logs: bool = typer.Option(False, "--logs", help="Show dftree logs"),
):
    """Time random workloads at doubling forest sizes."""
    from dftree.config.loader import load_config

    _configure_logging(logs)
    config = load_config()
    report = run_bench(profile, config.bench, seed, min_exp, max_exp, ops)

    table = Table(title=f"{__logo__} {report.profile} (seed {report.seed})")
    table.add_column("n", justify="right")
    table.add_column("ops", justify="right")
    table.add_column("total s", justify="right")
    table.add_column("us/op", justify="right")
    for row in report.rows:
        table.add_row(str(row.n), str(row.ops), f"{row.seconds:.3f}", f"{row.per_op_us:.2f}")
    console.print(table)

    ratio = report.mean_ratio
    style = "green" if ratio <= config.bench.max_ratio else "yellow"
    console.print(f"mean time(2n)/time(n): [{style}]{ratio:.3f}[/{style}]")

    if out:
        write_text(out, json.dumps(report.to_dict(), indent=2))
        console.print(f"[green]✓[/green] Report written to {out}")

    if check and not scaling_ok(report, config.bench):
        err_console.print(
            f"[red]Scaling check failed:[/red] {report.profile} mean ratio {ratio:.3f} "
            f"against max_ratio {config.bench.max_ratio}"
        )
        raise typer.Exit(EXIT_CHECK)


# ============================================================================
# Config
# ============================================================================


@app.command("config")
def show_config():
    """Show the effective configuration."""
    from dftree.config.loader import get_config_path, load_config

    config_path = get_config_path()
    console.print(
        f"Config: {config_path} {'[green]✓[/green]' if config_path.exists() else '[dim]defaults[/dim]'}"
    )
    console.print_json(data=load_config().model_dump())


@app.command()
def init():
    """Write the default configuration file."""
    from dftree.config.loader import get_config_path, save_config
    from dftree.config.schema import Config

    config_path = get_config_path()
    if config_path.exists():
        console.print(f"[yellow]Config already exists at {config_path}[/yellow]")
        if not typer.confirm("Overwrite?"):
            raise typer.Exit()

    save_config(Config())
    console.print(f"[green]✓[/green] Created config at {config_path}")


if __name__ == "__main__":
    app()
