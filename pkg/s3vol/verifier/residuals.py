"""Residual bookkeeping shared by the verification suites."""

from collections.abc import Callable, Sequence
import math

from loguru import logger
from s3vol import settings
from s3vol.dihedral_volume import PI_SQUARED, TWO_PI_SQUARED, volume_from_angles
from s3vol.exceptions import InvalidTetrahedronException, S3VolException
from s3vol.gram_geometry import (
    DihedralAngles,
    dual,
    is_spherical,
    lengths_from_angles,
)
from s3vol.verifier.models import Residual, SuiteReport


IDENTITY_BOUND = 1e-10
DERIVATIVE_BOUND = 1e-8
SCHLAFLI_BOUND = 1e-5
DUALITY_BOUND = 1e-9


def circular_distance(x: float, y: float, period: float = TWO_PI_SQUARED) -> float:
    d = (x - y) % period
    return min(d, period - d)


def evaluate(
    report: SuiteReport,
    name: str,
    compute: Callable[[], float],
    bound: float,
    kind: str = "upper",
) -> None:
    """Append a residual to the report; a failing computation is recorded as a flag."""
    try:
        value = float(compute())
    except (S3VolException, ValueError, ZeroDivisionError) as e:
        logger.warning(f"Residual '{name}' could not be evaluated: {e}")
        report.flags.append(f"{name}: {e}")
        value = None
    report.residuals.append(Residual(name=name, value=value, bound=bound, kind=kind))


def require_valid(angles: DihedralAngles | Sequence[float]) -> DihedralAngles:
    if not isinstance(angles, DihedralAngles):
        angles = DihedralAngles.from_sequence(angles)
    report = is_spherical(angles)
    if not report.verdict:
        raise InvalidTetrahedronException(
            f"not spherical: {'; '.join(report.messages)}", report
        )
    return angles


def flag_degeneracy(report: SuiteReport, det_gram: float) -> None:
    if det_gram < settings.DEGENERACY_FLAG_THRESHOLD:
        report.flags.append(f"near-degenerate: det G = {det_gram:.3e}")


def _shifted(theta: Sequence[float], j: int, step: float) -> DihedralAngles:
    values = list(theta)
    values[j - 1] += step
    return DihedralAngles(theta=tuple(values))


def schlafli_residual(angles: DihedralAngles, step: float | None = None) -> float:
    """max over j of |central difference of Vol in θⱼ - lⱼ/2|."""
    h = step or settings.FD_STEP
    lengths = lengths_from_angles(angles).l

    def derivative(j: int) -> float:
        upper = volume_from_angles(_shifted(angles.theta, j, h)).volume
        lower = volume_from_angles(_shifted(angles.theta, j, -h)).volume
        return (upper - lower) / (2 * h)

    return max(abs(derivative(j) - lengths[j - 1] / 2) for j in range(1, 7))


def duality_residual(angles: DihedralAngles) -> float:
    """|Vol(T) + Vol(T*) + ½ Σ lⱼ(π - θⱼ) - π²|."""
    lengths = lengths_from_angles(angles)
    dual_angles, _ = dual(angles, lengths)
    coupling = 0.5 * sum(
        l_j * (math.pi - theta_j) for l_j, theta_j in zip(lengths.l, angles.theta)
    )
    return abs(
        volume_from_angles(angles).volume
        + volume_from_angles(dual_angles).volume
        + coupling
        - PI_SQUARED
    )
