"""Results CSV files: per-step synthetic records and baseball coverage summaries.

Floats are written with 17 significant digits and read back with pandas'
round-trip parser, so a write/read cycle reproduces every value exactly.
"""

from pathlib import Path
from typing import Iterable, Literal, Tuple, Union

import pandas as pd
import structlog

from anytime_cs.analytics.metrics import (
    RECORD_COLUMNS,
    SUMMARY_COLUMNS,
    records_to_frame,
    summaries_to_frame,
)
from anytime_cs.exceptions import SchemaError
from anytime_cs.models import CoverageSummary, ExperimentRecord

logger = structlog.get_logger()

FLOAT_FORMAT = "%.17g"
ResultsKind = Literal["synthetic", "baseball"]


def format_float(x: float) -> str:
    return FLOAT_FORMAT % x


def _write(frame: pd.DataFrame, path: Union[str, Path]) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    frame.to_csv(
        path,
        index=False,
        float_format=FLOAT_FORMAT,
        na_rep="nan",
        encoding="utf-8",
        lineterminator="\n",
    )
    logger.info("results_written", path=str(path), rows=len(frame))
    return path


def write_records(records: Iterable[ExperimentRecord], path: Union[str, Path]) -> Path:
    """Write `method,replication,t,lo,hi,width` rows."""
    return _write(records_to_frame(records), path)


def write_summaries(summaries: Iterable[CoverageSummary], path: Union[str, Path]) -> Path:
    """Write `method,player_id,coverage_prob,mean_lo,mean_hi` rows."""
    return _write(summaries_to_frame(summaries), path)


def read_results(path: Union[str, Path]) -> Tuple[ResultsKind, pd.DataFrame]:
    """Read either results schema, detected from the header."""
    try:
        frame = pd.read_csv(path, float_precision="round_trip", encoding="utf-8")
    except pd.errors.EmptyDataError as e:
        raise SchemaError("file is empty", line=1) from e
    columns = list(frame.columns)
    if columns == RECORD_COLUMNS:
        return "synthetic", frame
    if columns == SUMMARY_COLUMNS:
        return "baseball", frame
    raise SchemaError(f"unrecognised results header {','.join(columns)}", line=1)
