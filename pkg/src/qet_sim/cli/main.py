"""Main CLI entry point for qet-sim."""

from __future__ import annotations

import sys
from collections.abc import Callable, Sequence
from pathlib import Path
from typing import Any, TypeVar

import click
from loguru import logger
from pydantic import ValidationError
from rich.console import Console

from qet_sim import __version__
from qet_sim.cli.run_config import TABULAR_COMMANDS, Command
from qet_sim.cli.runner import EXIT_NUMERIC, EXIT_OK, EXIT_VALIDATION
from qet_sim.config import QETConfig
from qet_sim.linalg import NumericFailureError, QETValidationError
from qet_sim.output import print_error


# Reports go to stdout; diagnostics and errors to this console
console = Console(stderr=True)

F = TypeVar("F", bound=Callable[..., Any])


class QETGroup(click.Group):
    """Click group that reports usage errors with exit status 1."""

    def main(  # type: ignore[override]
        self,
        args: Sequence[str] | None = None,
        prog_name: str | None = None,
        complete_var: str | None = None,
        standalone_mode: bool = True,
        **extra: Any,
    ) -> Any:
        if not standalone_mode:
            return super().main(args, prog_name, complete_var, False, **extra)
        try:
            status = super().main(args, prog_name, complete_var, False, **extra)
        except click.UsageError as e:
            e.show()
            sys.exit(EXIT_VALIDATION)
        except click.ClickException as e:
            e.show()
            sys.exit(EXIT_VALIDATION)
        except click.Abort:
            click.echo("Aborted!", err=True)
            sys.exit(EXIT_VALIDATION)
        sys.exit(status if isinstance(status, int) else EXIT_OK)


def _model_options(func: F) -> F:
    func = click.option("--k", "k", type=float, help="Ising coupling k > 0")(func)
    func = click.option("--h", "h", type=float, help="Local field h > 0")(func)
    return func


def _output_options(func: F) -> F:
    func = click.option(
        "--output",
        "-o",
        type=click.Path(dir_okay=False, path_type=Path),
        help="Write the report to this file instead of stdout",
    )(func)
    func = click.option(
        "--format",
        "fmt",
        type=click.Choice(["json", "csv"]),
        help="Report format (csv only for curve and sweep)",
    )(func)
    return func


@click.group(cls=QETGroup)
@click.version_option(version=__version__, prog_name="qet")
@click.option(
    "--verbose",
    "-v",
    is_flag=True,
    help="Enable debug logging and tracebacks",
)
@click.option(
    "--config",
    type=click.Path(exists=True, dir_okay=False),
    help="Path to configuration file",
)
@click.pass_context
def cli(ctx: click.Context, verbose: bool, config: str | None) -> None:
    """Minimal quantum energy teleportation simulator and audit suite.

    Builds the two-qubit model exactly, runs the measure, communicate and
    extract protocol with full energy accounting, and checks every closed
    form against the matrix oracle.
    """
    logger.remove()
    logger.add(sys.stderr, level="DEBUG" if verbose else "WARNING")

    from qet_sim.config import ConfigManager

    ctx.ensure_object(dict)
    ctx.obj["verbose"] = verbose
    ctx.obj["settings"] = ConfigManager(config).config


def _execute(ctx: click.Context, command: Command, **fields: Any) -> None:
    """Validate the fields, run the command and emit its report."""
    from qet_sim.cli.run_config import RunConfig
    from qet_sim.cli.runner import run

    settings: QETConfig = ctx.obj["settings"]
    verbose: bool = ctx.obj["verbose"]
    output: Path | None = fields.pop("output", None)
    fmt: str | None = fields.pop("fmt", None)
    if fmt is None:
        fmt = settings.output.format if command in TABULAR_COMMANDS else "json"
    values = {key: value for key, value in fields.items() if value is not None}

    try:
        config = RunConfig(command=command, format=fmt, output=output, **values)
        status, report = run(config)
    except (ValidationError, QETValidationError) as e:
        print_error(console, str(e), verbose)
        sys.exit(EXIT_VALIDATION)
    except NumericFailureError as e:
        print_error(console, str(e), verbose)
        sys.exit(EXIT_NUMERIC)

    if output:
        output.parent.mkdir(parents=True, exist_ok=True)
        output.write_text(report, encoding="utf-8")
        logger.debug(f"Report saved to {output}")
    else:
        click.echo(report, nl=False)
    if status != EXIT_OK:
        sys.exit(status)


@cli.command()
@_model_options
@click.option("--theta", type=float, help="Bob's rotation angle (default: optimum)")
@click.option("--wait", type=float, help="Delay before Bob's rotation")
@click.option(
    "--swap-outcomes",
    is_flag=True,
    help="Apply the rotation meant for the other measurement outcome",
)
@_output_options
@click.pass_context
def simulate(ctx: click.Context, **fields: Any) -> None:
    """Run the protocol once and print the energy ledger.

    Examples:
        qet simulate --h 1 --k 1 --theta 0.1608752772
    """
    _execute(ctx, "simulate", **fields)


@cli.command()
@_model_options
@click.option("--samples", type=int, help="Number of times on [0, 4pi/k]")
@_output_options
@click.pass_context
def curve(ctx: click.Context, **fields: Any) -> None:
    """Tabulate <H_B(t)> after Alice's measurement.

    Examples:
        qet curve --h 1 --k 1 --samples 64 --format csv
    """
    settings: QETConfig = ctx.obj["settings"]
    fields["samples"] = fields["samples"] or settings.audit.curve_samples
    _execute(ctx, "curve", **fields)


@cli.command()
@_model_options
@click.option("--wait", type=float, help="Delay before Bob's rotation")
@_output_options
@click.pass_context
def optimize(ctx: click.Context, **fields: Any) -> None:
    """Find the rotation angle that extracts the most energy.

    Examples:
        qet optimize --h 1 --k 1
    """
    _execute(ctx, "optimize", **fields)


@cli.command()
@click.option("--x-min", type=float, help="Smallest h/k")
@click.option("--x-max", type=float, help="Largest h/k")
@click.option("--n", type=int, help="Number of log-spaced grid points")
@click.option("--workers", type=int, help="Thread-pool size")
@click.option("--cache/--no-cache", "use_cache", default=None, help="Reuse cached sweeps")
@_output_options
@click.pass_context
def sweep(ctx: click.Context, **fields: Any) -> None:
    """Sweep E_B/k over x = h/k and locate its supremum.

    Examples:
        qet sweep --x-min 0.1 --x-max 10 --n 200 --format csv
    """
    settings: QETConfig = ctx.obj["settings"]
    defaults = {
        "x_min": settings.sweep.x_min,
        "x_max": settings.sweep.x_max,
        "n": settings.sweep.n,
        "workers": settings.sweep.workers,
        "use_cache": settings.cache.enabled,
    }
    for key, value in defaults.items():
        if fields[key] is None:
            fields[key] = value
    fields["cache_dir"] = settings.cache.directory
    fields["cache_ttl"] = settings.cache.ttl
    _execute(ctx, "sweep", **fields)


@cli.command()
@_model_options
@click.option("--epsilon", type=float, help="t_teleportation * k, in (0, 1)")
@click.option("--e-cc", type=float, help="Classical communication cost (reported only)")
@_output_options
@click.pass_context
def audit(ctx: click.Context, **fields: Any) -> None:
    """Evaluate the time-energy uncertainty argument.

    Examples:
        qet audit --h 1 --k 1 --epsilon 1e-3
    """
    settings: QETConfig = ctx.obj["settings"]
    if fields["epsilon"] is None:
        fields["epsilon"] = settings.audit.epsilon
    _execute(ctx, "audit", **fields)


@cli.command()
@_model_options
@_output_options
@click.pass_context
def verify(ctx: click.Context, **fields: Any) -> None:
    """Run every structural check and the printed-formula audit.

    Exits 0 when all checks pass; mismatching printed formulas are reported
    as findings without failing.

    Examples:
        qet verify --h 1 --k 1
    """
    settings: QETConfig = ctx.obj["settings"]
    fields["relative_tolerance"] = settings.audit.relative_tolerance
    fields["samples"] = settings.audit.curve_samples
    _execute(ctx, "verify", **fields)


@cli.command()
@click.option(
    "--init",
    is_flag=True,
    help="Create default configuration file",
)
@click.option(
    "--show",
    is_flag=True,
    help="Show current configuration",
)
@click.option(
    "--path",
    type=click.Path(dir_okay=False),
    help="Path to configuration file",
)
@click.pass_context
def config(ctx: click.Context, init: bool, show: bool, path: str | None) -> None:
    """Manage qet-sim configuration.

    Examples:
        qet config --init
        qet config --show
        qet config --path ./qet.yaml --show
    """
    from qet_sim.config import ConfigManager, create_default_config
    from qet_sim.output import render_config

    try:
        if init:
            created = create_default_config(path)
            console.print(f"[green]✓[/green] Created default configuration at {created}")
        elif show:
            settings = ConfigManager(path).config if path else ctx.obj["settings"]
            render_config(console, settings)
        else:
            console.print(
                "[yellow]Use --init to create config or --show to view current config[/yellow]"
            )
    except OSError as e:
        print_error(console, str(e), ctx.obj["verbose"])
        sys.exit(EXIT_VALIDATION)


if __name__ == "__main__":
    cli()
