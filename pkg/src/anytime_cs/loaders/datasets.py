"""Loader for the baseball batting dataset."""

from importlib import resources
from pathlib import Path
from typing import List, Optional, Union

import pandas as pd
import structlog
from pydantic import ValidationError

from anytime_cs.exceptions import SchemaError, first_line
from anytime_cs.models import PlayerRecord

logger = structlog.get_logger()

BASEBALL_COLUMNS = ["player_id", "name", "hits_45", "at_bats", "p_true"]
AT_BATS = 45
CANONICAL_PLAYERS = 18
CANONICAL_FILE = "efron_morris_1970.csv"


def _parse_row(row: "pd.Series[str]", line: int) -> PlayerRecord:
    try:
        record = PlayerRecord(
            player_id=int(row["player_id"]),
            name=row["name"].strip(),
            hits_45=int(row["hits_45"]),
            at_bats=int(row["at_bats"]),
            p_true=float(row["p_true"]),
        )
    except (ValueError, ValidationError) as e:
        raise SchemaError(f"invalid row: {first_line(e)}", line=line) from e
    if record.at_bats != AT_BATS:
        raise SchemaError(f"at_bats must be {AT_BATS}, got {record.at_bats}", line=line)
    return record


def read_baseball_csv(
    path: Union[str, Path], expected_rows: Optional[int] = CANONICAL_PLAYERS
) -> List[PlayerRecord]:
    """Parse and validate a `player_id,name,hits_45,at_bats,p_true` file.

    Errors carry the 1-based line number of the offending row (header = line 1).
    """
    log = logger.bind(component="baseball_loader", path=str(path))
    try:
        frame = pd.read_csv(path, dtype=str, keep_default_na=False, encoding="utf-8")
    except pd.errors.EmptyDataError as e:
        raise SchemaError("file is empty", line=1) from e
    except pd.errors.ParserError as e:
        raise SchemaError(first_line(e)) from e

    if list(frame.columns) != BASEBALL_COLUMNS:
        raise SchemaError(
            f"expected header {','.join(BASEBALL_COLUMNS)}, got {','.join(frame.columns)}",
            line=1,
        )

    players = [_parse_row(row, line=i + 2) for i, row in frame.iterrows()]  # type: ignore[operator]
    if expected_rows is not None and len(players) != expected_rows:
        raise SchemaError(f"expected {expected_rows} data rows, got {len(players)}")
    ids = [p.player_id for p in players]
    if len(set(ids)) != len(ids):
        raise SchemaError("duplicate player_id values")

    log.info("baseball_dataset_loaded", players=len(players))
    return players


def load_baseball(path: Optional[Union[str, Path]] = None) -> List[PlayerRecord]:
    """The given file (any number of players), or the canonical 18-player file."""
    if path is not None:
        return read_baseball_csv(path, expected_rows=None)
    ref = resources.files("anytime_cs") / "data" / CANONICAL_FILE
    with resources.as_file(ref) as canonical:
        return read_baseball_csv(canonical)
