"""Tidy CSV output of result records, one row per record."""

from __future__ import annotations

import csv
import io
import logging
from collections.abc import Iterable
from pathlib import Path

from ..exceptions import DataError, ExperimentIOError
from .models import ResultRecord

# Set up logger
logger = logging.getLogger("qralab.harness.csv_io")

CSV_COLUMNS = (
    "experiment",
    "seed",
    "trial",
    "nc",
    "m",
    "iteration",
    "mse_path1",
    "mse_path2",
    "loss",
    "wall_time_s",
)


def _format_optional(value: int | None) -> str:
    return "" if value is None else str(value)


def _row(record: ResultRecord) -> list[str]:
    # repr gives the shortest decimal string that round-trips to the same float
    return [
        record.experiment,
        str(record.seed),
        str(record.trial),
        str(record.nc),
        _format_optional(record.m),
        _format_optional(record.iteration),
        repr(float(record.mse_path1)),
        repr(float(record.mse_path2)),
        repr(float(record.loss)),
        repr(float(record.wall_time_s)),
    ]


def format_csv(records: Iterable[ResultRecord]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    writer.writerows(_row(record) for record in records)
    return buffer.getvalue()


def emit_csv(records: Iterable[ResultRecord], path: str | Path) -> Path:
    """Write `records` as UTF-8 CSV with LF line endings.

    Raises:
        ExperimentIOError: If the file cannot be written.
    """
    target = Path(path)
    text = format_csv(records)
    try:
        target.parent.mkdir(parents=True, exist_ok=True)
        with target.open("w", encoding="utf-8", newline="") as f:
            f.write(text)
    except OSError as e:
        raise ExperimentIOError(f"could not write results ({e.strerror})", str(target)) from e
    logger.info("wrote %s", target)
    return target


def _optional_int(value: str) -> int | None:
    return None if value == "" else int(value)


def parse_csv(text: str, source: str = "<string>") -> list[ResultRecord]:
    reader = csv.reader(io.StringIO(text))
    header = next(reader, None)
    if header is None or tuple(header) != CSV_COLUMNS:
        raise DataError(f"{source}: unexpected CSV header {header}")
    records = []
    for line_number, row in enumerate(reader, start=2):
        if len(row) != len(CSV_COLUMNS):
            raise DataError(f"{source}:{line_number}: expected {len(CSV_COLUMNS)} fields")
        try:
            records.append(
                ResultRecord(
                    experiment=row[0],
                    seed=int(row[1]),
                    trial=int(row[2]),
                    nc=int(row[3]),
                    m=_optional_int(row[4]),
                    iteration=_optional_int(row[5]),
                    mse_path1=float(row[6]),
                    mse_path2=float(row[7]),
                    loss=float(row[8]),
                    wall_time_s=float(row[9]),
                )
            )
        except ValueError as e:
            raise DataError(f"{source}:{line_number}: {e}") from e
    return records


def read_csv(path: str | Path) -> list[ResultRecord]:
    """Parse a file written by `emit_csv`.

    Raises:
        ExperimentIOError: If the file cannot be read.
        DataError: If the content is not a results CSV.
    """
    source = Path(path)
    try:
        text = source.read_text(encoding="utf-8")
    except OSError as e:
        raise ExperimentIOError(f"could not read results ({e.strerror})", str(source)) from e
    return parse_csv(text, str(source))
