"""Logging facilities for s3vol."""

import io
from pathlib import Path
import sys

from loguru import logger
from s3vol import settings
from s3vol.dihedral_volume import VolumeResult
from s3vol.verifier import SuiteReport


def configure_logging(level: str | None = None, log_file: Path | None = None) -> None:
    """Replace loguru's default sink with a stderr sink and an optional file sink."""
    logger.remove()
    logger.add(
        sink=sys.stderr,
        level=level or settings.LOG_LEVEL,
        format="<level>{level: <8}</level> | {name}:{line} - {message}",
    )

    if (log_file := log_file or settings.LOG_FILE) is not None:
        logger.add(sink=log_file, level="DEBUG", rotation="2 MB", retention=1)


def _create_mapping_log(mapping: dict, indent: int = 4) -> str:
    output = io.StringIO()

    for key, value in mapping.items():
        output.write(f"{' '*indent}{key}: {value}\n")

    return output.getvalue()


def volume_result_log(result: VolumeResult) -> None:
    """Logger for the diagnostics of a volume computation."""
    diagnostics = {
        "z0": result.z0,
        "arg(-q2)": result.arg_neg_q2,
        "det G": result.det_g,
        "raw value": result.raw_value,
    }
    _log_message = (
        f"Computed volume {result.volume!r} from {result.formula}:\n"
        f"{_create_mapping_log(diagnostics)}"
    )
    logger.info(_log_message)

    for warning in result.branch_warnings:
        logger.warning(warning)


def suite_report_log(report: SuiteReport) -> None:
    """Logger for a finished verification suite."""
    residuals = {
        residual.name: (
            f"{residual.value!r} (bound {residual.bound!r}, "
            f"{'passed' if residual.passed else 'FAILED'})"
        )
        for residual in report.residuals
    }

    _log_message = (
        f"Suite '{report.suite}' {'passed' if report.passed else 'failed'}"
        f"{':' if residuals else '.'}\n"
        f"{_create_mapping_log(residuals)}"
    )
    logger.info(_log_message)

    for flag in report.flags:
        logger.warning(f"Suite '{report.suite}': {flag}")


def batch_summary_log(succeeded: int, failed: int, duplicates: dict[str, int]) -> str:
    """Log and return the one-line summary of a batch run."""
    summary = f"{succeeded + failed} records: {succeeded} succeeded, {failed} failed"
    if duplicates:
        summary += (
            f"; duplicate ids: {', '.join(f'{k} (x{v})' for k, v in duplicates.items())}"
        )
        logger.warning(f"Duplicate batch ids: {duplicates}")

    logger.info(summary)
    return summary
