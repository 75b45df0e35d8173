"""Output layer of the command-line surface: rich tables and JSON on stdout."""

from collections.abc import Sequence
import json
import math

from pydantic import ValidationError
from rich.console import Console
from rich.markup import escape
from rich.table import Table
from s3vol.dihedral_volume import VolumeResult
from s3vol.exceptions import InvalidTetrahedronException, S3VolException
from s3vol.gram_geometry import ValidityReport
from s3vol.verifier import SuiteReport


EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INVALID = 2
EXIT_RESIDUAL = 3

console = Console(highlight=False)
err_console = Console(stderr=True, highlight=False)


def fmt(value: float | complex | None) -> str:
    """12 significant digits."""
    if value is None:
        return "n/a"
    if isinstance(value, complex):
        return f"{value.real:.12g}{value.imag:+.12g}i"
    return f"{value:.12g}"


def print_json(data: object) -> None:
    print(json.dumps(data, indent=2, ensure_ascii=False))


def volume_result_json(result: VolumeResult) -> dict:
    return result.model_dump(mode="json", by_alias=True)


def validity_json(report: ValidityReport) -> dict:
    return report.model_dump(mode="json", by_alias=True)


def error_message(error: Exception) -> str:
    if isinstance(error, ValidationError):
        return "; ".join(
            f"{'.'.join(map(str, detail['loc']))}: {detail['msg']}"
            for detail in error.errors()
        )
    return str(error)


def error_json(error: Exception) -> dict:
    data: dict = {"error": error_message(error), "type": type(error).__name__}
    if isinstance(error, InvalidTetrahedronException) and error.report is not None:
        data["validity"] = validity_json(error.report)
    return data


def volume_table(result: VolumeResult) -> Table:
    table = Table(title=f"Volume ({result.formula})", show_header=False)
    table.add_column("quantity", style="bold")
    table.add_column("value", justify="right")

    table.add_row("volume", fmt(result.volume))
    table.add_row("z0", fmt(result.z0))
    table.add_row("arg(-q2)", fmt(result.arg_neg_q2))
    table.add_row("det G", fmt(result.det_g))
    table.add_row("raw value", fmt(result.raw_value))
    for warning in result.branch_warnings:
        table.add_row("warning", escape(warning))

    return table


def validity_table(report: ValidityReport) -> Table:
    table = Table(
        title=f"Spherical: {'yes' if report.verdict else 'no'}", show_header=False
    )
    table.add_column("check", style="bold")
    table.add_column("result", justify="right")

    table.add_row("angles in (0, π)", str(report.in_range))
    table.add_row("positive definite", str(report.positive_definite))
    table.add_row("degenerate", str(report.degenerate))
    table.add_row("det G", fmt(report.det_gram))
    for k, minor in enumerate(report.leading_minors, start=1):
        table.add_row(f"leading minor {k}", fmt(minor))
    for triple, ok in report.vertex_conditions.items():
        table.add_row(f"vertex {triple}", str(ok))
    for message in report.messages:
        table.add_row("message", escape(message))

    return table


def values_table(title: str, radians: Sequence[float]) -> Table:
    table = Table(title=title)
    table.add_column("edge", justify="right")
    table.add_column("radians", justify="right")
    table.add_column("degrees", justify="right")

    for j, value in enumerate(radians, start=1):
        table.add_row(f"e{j}", fmt(value), fmt(math.degrees(value)))

    return table


def report_error(error: S3VolException | ValueError, as_json: bool) -> int:
    """Write an error (and any attached validity report) and return its exit code."""
    code = EXIT_INVALID if isinstance(error, S3VolException) else EXIT_USAGE

    if as_json:
        print_json(error_json(error))
        return code

    err_console.print(f"[red]error:[/red] {escape(error_message(error))}")
    if isinstance(error, InvalidTetrahedronException) and error.report is not None:
        err_console.print(validity_table(error.report))
    return code


def suite_table(report: SuiteReport) -> Table:
    table = Table(title=f"Suite '{report.suite}'")
    table.add_column("residual")
    table.add_column("value", justify="right")
    table.add_column("bound", justify="right")
    table.add_column("passed")

    for residual in report.residuals:
        table.add_row(
            residual.name, fmt(residual.value), fmt(residual.bound), str(residual.passed)
        )

    return table
