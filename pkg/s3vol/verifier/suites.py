"""Schläfli, duality and Monte-Carlo verification suites."""

from collections.abc import Sequence

from s3vol import settings
from s3vol.dihedral_volume import volume_from_angles
from s3vol.gram_geometry import DihedralAngles, gram_from_angles
from s3vol.verifier.models import SuiteReport
from s3vol.verifier.montecarlo import montecarlo_volume
from s3vol.verifier.residuals import (
    DUALITY_BOUND,
    SCHLAFLI_BOUND,
    duality_residual,
    evaluate,
    flag_degeneracy,
    require_valid,
    schlafli_residual,
)


MONTECARLO_SIGMAS = 4.0


def schlafli_suite(
    angles: DihedralAngles | Sequence[float], step: float | None = None
) -> SuiteReport:
    angles = require_valid(angles)
    report = SuiteReport(suite="schlafli", angles=angles.theta)
    flag_degeneracy(report, gram_from_angles(angles).det)
    evaluate(report, "schlafli", lambda: schlafli_residual(angles, step), SCHLAFLI_BOUND)
    return report


def duality_suite(angles: DihedralAngles | Sequence[float]) -> SuiteReport:
    angles = require_valid(angles)
    report = SuiteReport(suite="duality", angles=angles.theta)
    flag_degeneracy(report, gram_from_angles(angles).det)
    evaluate(report, "duality", lambda: duality_residual(angles), DUALITY_BOUND)
    return report


def montecarlo_suite(
    angles: DihedralAngles | Sequence[float],
    n: int | None = None,
    seed: int = 0,
    workers: int | None = None,
) -> SuiteReport:
    """Compare the closed-form volume with a Monte-Carlo estimate.

    The residual is the deviation in units of the estimate's standard error.
    """
    angles = require_valid(angles)
    report = SuiteReport(suite="montecarlo", angles=angles.theta)
    flag_degeneracy(report, gram_from_angles(angles).det)

    volume = volume_from_angles(angles).volume
    estimate = montecarlo_volume(
        angles, n or settings.MC_SAMPLES, seed=seed, workers=workers
    )
    report.details.update(
        volume=volume,
        estimate=estimate.estimate,
        stderr=estimate.stderr,
        hits=estimate.hits,
        n=estimate.n,
        seed=estimate.seed,
    )
    evaluate(
        report,
        "montecarlo_sigmas",
        lambda: abs(volume - estimate.estimate) / estimate.stderr,
        MONTECARLO_SIGMAS,
    )
    return report
