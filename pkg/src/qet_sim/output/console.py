"""Rich rendering for diagnostics and the configuration table."""

from __future__ import annotations

from rich.console import Console
from rich.markup import escape
from rich.table import Table

from qet_sim.config import QETConfig


def render_config(console: Console, config: QETConfig) -> None:
    """Print every configuration section as one table."""
    table = Table(title="Current Configuration")
    table.add_column("Section", style="cyan")
    table.add_column("Key", style="green")
    table.add_column("Value", justify="right")

    for section, values in config.model_dump().items():
        for key, value in values.items():
            table.add_row(section, key, str(value))

    console.print(table)


def print_error(console: Console, message: str, verbose: bool = False) -> None:
    """Print an error line, plus the active traceback when verbose."""
    console.print(f"[bold red]Error:[/bold red] {escape(message)}")
    if verbose:
        console.print_exception()
