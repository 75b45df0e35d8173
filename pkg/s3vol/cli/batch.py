"""Batch volume computation over CSV records."""

import argparse
from collections.abc import Iterable
import csv
import json
import math
from pathlib import Path
from typing import Literal, Self

from loguru import logger
from pydantic import BaseModel, ConfigDict, ValidationError, field_validator
from rich.markup import escape
from s3vol.abcs import _ABCRunner
from s3vol.cli.output import EXIT_OK, EXIT_USAGE, err_console, error_message
from s3vol.cli.runners import compute_volume
from s3vol.exceptions import (
    AngleRangeException,
    BatchFileException,
    S3VolException,
)
from s3vol.utils._types import Real6
from s3vol.utils.loggers import batch_summary_log
from toolz import count, frequencies, pluck, valfilter


CSV_HEADER: list[str] = ["id", "mode", *(f"v{k}" for k in range(1, 7)), "unit"]


class BatchRecord(BaseModel):
    """One CSV record: id, mode, six values and their unit."""

    model_config = ConfigDict(frozen=True)

    id: str
    mode: Literal["angles", "lengths"]
    values: Real6
    unit: Literal["radians", "degrees"]

    @field_validator("values")
    @classmethod
    def _values_validator(cls, value):
        if not all(math.isfinite(v) for v in value):
            raise AngleRangeException(f"Six finite values are required; received {value}.")
        return value

    @classmethod
    def from_row(cls, row: dict[str, str | None]) -> Self:
        return cls(
            id=row.get("id") or "",
            mode=(row.get("mode") or "").strip(),
            values=tuple(row.get(f"v{k}") for k in range(1, 7)),
            unit=(row.get("unit") or "").strip(),
        )

    @property
    def radians(self) -> tuple[float, ...]:
        if self.unit == "degrees":
            return tuple(math.radians(v) for v in self.values)
        return self.values


def read_rows(path: Path) -> list[dict[str, str | None]]:
    """Read the CSV records; an empty file has none."""
    try:
        with open(path, newline="", encoding="utf-8-sig") as f:
            reader = csv.DictReader(f)
            if reader.fieldnames is None:
                return []
            if [name.strip() for name in reader.fieldnames] != CSV_HEADER:
                raise BatchFileException(
                    f"Expected header '{','.join(CSV_HEADER)}'; "
                    f"received '{','.join(reader.fieldnames)}'."
                )
            return list(reader)
    except (OSError, UnicodeDecodeError, csv.Error) as e:
        raise BatchFileException(f"Cannot read '{path}': {e}") from e


def process_row(row: dict[str, str | None]) -> dict:
    """Volume and diagnostics for one record, or the embedded error."""
    record_id = row.get("id") or ""

    try:
        record = BatchRecord.from_row(row)
        result = compute_volume(record.mode, record.radians)
    except (S3VolException, ValidationError) as e:
        logger.warning(f"Batch record '{record_id}' failed: {error_message(e)}")
        return {"id": record_id, "error": error_message(e)}

    return {
        "id": record.id,
        "volume": result.volume,
        "diagnostics": result.model_dump(
            mode="json", by_alias=True, exclude={"volume"}
        ),
    }


def process_rows(rows: Iterable[dict[str, str | None]]) -> tuple[list[dict], str]:
    """Process all records and build the summary line."""
    results = list(map(process_row, rows))

    failed = count(result for result in results if "error" in result)
    duplicates = valfilter(lambda n: n > 1, frequencies(pluck("id", results)))
    summary = batch_summary_log(
        succeeded=len(results) - failed, failed=failed, duplicates=duplicates
    )

    return results, summary


class BatchRunner(_ABCRunner):
    """Runner for batch volume computations from a CSV file."""

    def __init__(self, input_path: Path, output_path: Path | None = None):
        self.input_path = Path(input_path)
        self.output_path = None if output_path is None else Path(output_path)

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> "BatchRunner":
        return cls(args.input, args.output)

    def persist(self) -> int:
        """Run the batch and write the JSON array to the output file or stdout."""
        try:
            results, summary = self.run()
        except BatchFileException as e:
            err_console.print(f"[red]error:[/red] {escape(str(e))}")
            return EXIT_USAGE

        serialized = json.dumps(results, indent=2, ensure_ascii=False)
        if self.output_path is None:
            print(serialized)
        else:
            try:
                with open(self.output_path, "w", encoding="utf-8") as f:
                    f.write(serialized + "\n")
            except OSError as e:
                err_console.print(
                    f"[red]error:[/red] cannot write output: {escape(str(e))}"
                )
                return EXIT_USAGE

        err_console.print(summary, markup=False)
        return EXIT_OK

    def run(self) -> tuple[list[dict], str]:
        return process_rows(read_rows(self.input_path))
