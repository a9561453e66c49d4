"""Command-line interface for anytime-cs."""

from contextlib import contextmanager
from pathlib import Path
from typing import Iterator, List, NoReturn, Optional

import pandas as pd
import typer
from rich.console import Console
from rich.table import Table

from anytime_cs.analytics.metrics import checkpoint_widths, width_curve
from anytime_cs.config import Settings, load_settings
from anytime_cs.exceptions import first_line
from anytime_cs.loaders.results import format_float
from anytime_cs.models import Method
from anytime_cs.pipeline import ExperimentPipeline, configure_logging
from anytime_cs.simulation.experiments import ALL_METHODS, BASEBALL_METHODS

app = typer.Typer(
    help="Anytime-valid confidence sequences for bounded means", no_args_is_help=True
)
console = Console()
err_console = Console(stderr=True, soft_wrap=True, highlight=False)

PROG = "anytime-cs"
CHECKPOINTS = [1, 10, 100, 500, 1000, 1500, 2000, 3000, 4000, 8000, 10_000]

ConfigOpt = typer.Option(None, "--config", help="Dotenv-format settings file")
SeedOpt = typer.Option(None, "--seed", help="Master seed (falls back to ANYTIME_CS_SEED, then 0)")
AlphaOpt = typer.Option(None, "--alpha", help="Miscoverage budget")
GridOpt = typer.Option(None, "--grid", help="Betting grid size G")
ReplicatesOpt = typer.Option(None, "--replicates-B", "--replicates-b", help="Bootstrap replicates")
BatchesOpt = typer.Option(None, "--batches-L", "--batches-l", help="Bootstrap dyadic batches")
StrideOpt = typer.Option(None, "--bootstrap-stride", help="Steps between bootstrap recomputations")
OutOpt = typer.Option(None, "--out", help="Output directory")
WorkersOpt = typer.Option(None, "--workers", help="Processes for replications")


def _fail(message: str) -> NoReturn:
    err_console.print(f"{PROG}: error: {message}", markup=False)
    raise typer.Exit(1)


@contextmanager
def _diagnostics() -> Iterator[None]:
    """Turn library failures into a single error line and exit status 1."""
    try:
        yield
    except (ValueError, OSError) as e:
        _fail(first_line(e))


def _settings(config: Optional[Path], **overrides: object) -> Settings:
    cfg = load_settings(config, **overrides)
    configure_logging(cfg.log_level, cfg.log_format)
    return cfg


def _print_widths(frame: pd.DataFrame, horizon: int) -> None:
    checkpoints = sorted({t for t in CHECKPOINTS if t <= horizon} | {horizon})
    table = Table(title="Mean width at checkpoints")
    table.add_column("t", style="dim", justify="right")
    curve = checkpoint_widths(width_curve(frame), checkpoints)
    for method in curve.columns:
        table.add_column(str(method), style="cyan", justify="right")
    for t, row in curve.iterrows():
        table.add_row(str(t), *(f"{w:.4f}" for w in row))
    console.print(table)


def _print_coverage(frame: pd.DataFrame) -> None:
    wide = frame.pivot(index="player_id", columns="method", values="coverage_prob")
    table = Table(title="Coverage probability per player")
    table.add_column("Player", style="dim", justify="right")
    for method in wide.columns:
        table.add_column(str(method), style="green", justify="right")
    for player_id, row in wide.iterrows():
        table.add_row(str(player_id), *(f"{p:.2f}" for p in row))
    console.print(table)


@app.command()
def simulate(
    alpha: Optional[float] = AlphaOpt,
    n: Optional[int] = typer.Option(None, "--n", help="Stream length"),
    seeds: Optional[int] = typer.Option(None, "--seeds", help="Number of replications"),
    seed: Optional[int] = SeedOpt,
    grid: Optional[int] = GridOpt,
    replicates_b: Optional[int] = ReplicatesOpt,
    batches_l: Optional[int] = BatchesOpt,
    bootstrap_stride: Optional[int] = StrideOpt,
    method: Optional[List[Method]] = typer.Option(
        None, "--method", help="Engine to run (repeatable; default all)"
    ),
    plot: bool = typer.Option(False, "--plot", help="Also write SVG figures"),
    out: Optional[Path] = OutOpt,
    workers: Optional[int] = WorkersOpt,
    config: Optional[Path] = ConfigOpt,
):
    """Run the Beta(10,30) synthetic study and write synthetic.csv."""
    with _diagnostics():
        cfg = _settings(
            config,
            alpha=alpha,
            horizon=n,
            seeds=seeds,
            seed=seed,
            grid_size=grid,
            replicates_b=replicates_b,
            batches_l=batches_l,
            bootstrap_stride=bootstrap_stride,
            out_dir=out,
            workers=workers,
        )
        methods = tuple(dict.fromkeys(method)) if method else ALL_METHODS
        output = ExperimentPipeline(cfg).simulate(methods=methods, plot=plot)

    _print_widths(output.frame, cfg.horizon)
    console.print(f"[bold green]✓ Wrote {output.results_path}[/bold green]")
    for figure in output.figures:
        console.print(f"[green]✓ Wrote {figure}[/green]")


@app.command()
def baseball(
    data: Optional[Path] = typer.Option(None, "--data", help="Baseball CSV (default: bundled)"),
    replications: Optional[int] = typer.Option(
        None, "--replications", help="Data replications per player"
    ),
    alpha: Optional[float] = AlphaOpt,
    seed: Optional[int] = SeedOpt,
    grid: Optional[int] = GridOpt,
    replicates_b: Optional[int] = ReplicatesOpt,
    batches_l: Optional[int] = BatchesOpt,
    method: Optional[List[Method]] = typer.Option(
        None, "--method", help="Engine to run (repeatable; default betting and bootstrap)"
    ),
    plot: bool = typer.Option(False, "--plot", help="Also write SVG figures"),
    out: Optional[Path] = OutOpt,
    workers: Optional[int] = WorkersOpt,
    config: Optional[Path] = ConfigOpt,
):
    """Run the 18-player batting study and write baseball.csv."""
    with _diagnostics():
        cfg = _settings(
            config,
            alpha=alpha,
            seed=seed,
            replications=replications,
            grid_size=grid,
            replicates_b=replicates_b,
            batches_l=batches_l,
            out_dir=out,
            workers=workers,
        )
        methods = tuple(dict.fromkeys(method)) if method else BASEBALL_METHODS
        output = ExperimentPipeline(cfg).baseball(data, methods=methods, plot=plot)

    _print_coverage(output.frame)
    console.print(f"[bold green]✓ Wrote {output.results_path}[/bold green]")
    for figure in output.figures:
        console.print(f"[green]✓ Wrote {figure}[/green]")


@app.command()
def stream(
    method: Method = typer.Option(Method.BETTING, "--method", help="Engine"),
    alpha: Optional[float] = AlphaOpt,
    seed: Optional[int] = SeedOpt,
    grid: Optional[int] = GridOpt,
    replicates_b: Optional[int] = ReplicatesOpt,
    batches_l: Optional[int] = BatchesOpt,
    config: Optional[Path] = ConfigOpt,
):
    """Read one observation per line from stdin; print t,lo,hi after each."""
    stdin = typer.get_text_stream("stdin")
    with _diagnostics():
        cfg = _settings(
            config,
            alpha=alpha,
            seed=seed,
            grid_size=grid,
            replicates_b=replicates_b,
            batches_l=batches_l,
        )
        for t, interval in ExperimentPipeline(cfg).stream(stdin, method):
            typer.echo(f"{t},{format_float(interval.lo)},{format_float(interval.hi)}")


@app.command()
def plot(
    results: Path = typer.Argument(..., help="synthetic.csv or baseball.csv"),
    data: Optional[Path] = typer.Option(None, "--data", help="Baseball CSV for truth markers"),
    out: Optional[Path] = OutOpt,
    config: Optional[Path] = ConfigOpt,
):
    """Render the SVG figures of an existing results file."""
    with _diagnostics():
        cfg = _settings(config, out_dir=out)
        figures = ExperimentPipeline(cfg).plot(results, data)

    for figure in figures:
        console.print(f"[green]✓ Wrote {figure}[/green]")


@app.command()
def version():
    """Show version information."""
    from anytime_cs import __version__

    console.print(f"[bold]anytime-cs[/bold] v{__version__}")
    console.print("Time-uniform confidence sequences for bounded means")


if __name__ == "__main__":
    app()
