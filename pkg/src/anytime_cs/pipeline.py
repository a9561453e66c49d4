"""Run orchestration: studies and streams in, results files out."""

import logging
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple, Union

import pandas as pd
import structlog

from anytime_cs.analytics.charts import render_baseball_figures, render_synthetic_figures
from anytime_cs.analytics.metrics import records_to_frame, summaries_to_frame
from anytime_cs.config import Settings
from anytime_cs.exceptions import DataContractError
from anytime_cs.loaders.datasets import load_baseball
from anytime_cs.loaders.results import read_results, write_records, write_summaries
from anytime_cs.models import Interval, Method, SimulationTruth
from anytime_cs.sequences import make_engine
from anytime_cs.simulation.experiments import (
    ALL_METHODS,
    BASEBALL_METHODS,
    run_baseball,
    run_synthetic_replications,
)

logger = structlog.get_logger()

SYNTHETIC_FILE = "synthetic.csv"
BASEBALL_FILE = "baseball.csv"


def configure_logging(level: str = "INFO", fmt: str = "console") -> None:
    """Route structlog through stdlib logging on standard error."""
    logging.basicConfig(
        format="%(message)s",
        stream=sys.stderr,
        level=getattr(logging, level.upper(), logging.INFO),
        force=True,
    )
    structlog.configure(
        processors=[
            structlog.stdlib.filter_by_level,
            structlog.stdlib.add_log_level,
            structlog.stdlib.add_logger_name,
            structlog.processors.TimeStamper(fmt="iso"),
            structlog.processors.StackInfoRenderer(),
            structlog.processors.format_exc_info,
            structlog.processors.JSONRenderer()
            if fmt == "json"
            else structlog.dev.ConsoleRenderer(colors=False),
        ],
        wrapper_class=structlog.stdlib.BoundLogger,
        context_class=dict,
        logger_factory=structlog.stdlib.LoggerFactory(),
        cache_logger_on_first_use=False,
    )


@dataclass
class RunOutput:
    """Files written by one run and the table they were written from."""

    results_path: Path
    frame: pd.DataFrame
    figures: List[Path] = field(default_factory=list)


def parse_observation(text: str, line: int) -> Optional[float]:
    """One stream input line as a float; None for blank lines."""
    text = text.strip()
    if not text:
        return None
    try:
        return float(text)
    except ValueError:
        raise DataContractError(f"line {line}: not a number: {text!r}") from None


class ExperimentPipeline:
    """Runs the synthetic study, the baseball study and single streams from settings."""

    def __init__(self, config: Settings):
        self.config = config
        self.log = logger.bind(component="experiment_pipeline")
        self.cs = config.cs_config()
        self.betting = config.betting_config()
        self.bootstrap = config.bootstrap_config()

    @property
    def out_dir(self) -> Path:
        return Path(self.config.out_dir)

    def simulate(self, methods: Sequence[Method] = ALL_METHODS, plot: bool = False) -> RunOutput:
        """Beta(a, b) streams of length `horizon`, `seeds` replications, all engines."""
        truth = SimulationTruth(family="beta", a=self.config.beta_a, b=self.config.beta_b)
        self.log.info(
            "simulate_started",
            seed=self.config.master_seed,
            replications=self.config.seeds,
            horizon=self.cs.horizon,
            methods=[m.value for m in methods],
        )
        records = run_synthetic_replications(
            self.cs,
            self.betting,
            self.bootstrap,
            seed=self.config.master_seed,
            replications=self.config.seeds,
            workers=self.config.workers,
            truth=truth,
            methods=methods,
        )
        path = write_records(records, self.out_dir / SYNTHETIC_FILE)
        frame = records_to_frame(records)
        figures = render_synthetic_figures(frame, self.out_dir) if plot else []
        return RunOutput(path, frame, figures)

    def baseball(
        self,
        data: Optional[Union[str, Path]] = None,
        methods: Sequence[Method] = BASEBALL_METHODS,
        plot: bool = False,
    ) -> RunOutput:
        """Coverage of each player's season average after 45 simulated at-bats."""
        players = load_baseball(data)
        self.log.info(
            "baseball_started",
            seed=self.config.master_seed,
            players=len(players),
            replications=self.config.replications,
        )
        summaries = run_baseball(
            players,
            replications=self.config.replications,
            cfg=self.cs,
            bcfg=self.betting,
            bscfg=self.bootstrap,
            seed=self.config.master_seed,
            workers=self.config.workers,
            methods=methods,
        )
        path = write_summaries(summaries, self.out_dir / BASEBALL_FILE)
        frame = summaries_to_frame(summaries)
        figures = render_baseball_figures(frame, self.out_dir, players) if plot else []
        return RunOutput(path, frame, figures)

    def stream(self, lines: Iterable[str], method: Method) -> Iterator[Tuple[int, Interval]]:
        """Feed one observation per non-blank line to a fresh engine; yield (t, C_t)."""
        engine = make_engine(method, self.cs, self.betting, self.bootstrap)
        for line_no, text in enumerate(lines, start=1):
            x = parse_observation(text, line_no)
            if x is None:
                continue
            try:
                interval = engine.update(x)
            except DataContractError as e:
                raise DataContractError(f"line {line_no}: {e}") from None
            yield engine.t, interval
        self.log.info("stream_finished", method=method.value, t=engine.t)

    def plot(
        self, results: Union[str, Path], data: Optional[Union[str, Path]] = None
    ) -> List[Path]:
        """Re-render the figures of a results file written earlier."""
        kind, frame = read_results(results)
        self.log.info("plot_started", path=str(results), kind=kind, rows=len(frame))
        if kind == "synthetic":
            return render_synthetic_figures(frame, self.out_dir)
        return render_baseball_figures(frame, self.out_dir, load_baseball(data))

