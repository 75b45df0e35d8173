"""Volume of a spherical tetrahedron from its dihedral angles."""

from collections.abc import Sequence
import math

from loguru import logger
from s3vol import settings
from s3vol.czmath import plog
from s3vol.dihedral_volume.formulas import L_eval, q_coefficients, z_aux
from s3vol.dihedral_volume.models import VolumeResult
from s3vol.exceptions import BranchException, InvalidTetrahedronException
from s3vol.gram_geometry import DihedralAngles, is_spherical


PI_SQUARED = math.pi**2
TWO_PI_SQUARED = 2 * PI_SQUARED


def arg_neg_q2(q2: complex, warnings: list[str]) -> float:
    """Principal arg(-q2) in (-π, π].

    On the locus where q2 is a positive real, -q2 sits on the negative axis
    and the value π is returned with a warning.
    """
    if q2.real > 0 and abs(q2.imag) <= settings.UNIT_TOLERANCE * abs(q2):
        message = "q2 lies on the positive real axis; arg(-q2) taken as π"
        logger.warning(message)
        warnings.append(message)
        return math.pi
    return plog(-q2).imag


def reduce_volume(raw: float, warnings: list[str]) -> float:
    """Reduce a raw formula value mod 2π² to the volume in [0, π²).

    A representative in [π², 2π²) is repaired only when it lies within
    BRANCH_REPAIR_TOLERANCE below 2π² (a volume of numerically zero).
    """
    representative = raw % TWO_PI_SQUARED
    if representative < PI_SQUARED:
        return representative

    defect = TWO_PI_SQUARED - representative
    if defect <= settings.BRANCH_REPAIR_TOLERANCE:
        message = (
            f"mod 2π² representative {representative!r} repaired to 0 "
            f"(defect {defect:.3e})"
        )
        logger.warning(message)
        warnings.append(message)
        return 0.0

    raise BranchException(
        f"Raw value {raw!r} reduces to {representative!r}, which is not below π²."
    )


def volume_from_angles(angles: DihedralAngles | Sequence[float]) -> VolumeResult:
    """Volume from dihedral angles.

    Vol = -Re L(a, z0) + π (arg(-q2) + ½ Σ θⱼ) - 3π²/2  mod 2π².
    """
    if not isinstance(angles, DihedralAngles):
        angles = DihedralAngles.from_sequence(angles)

    report = is_spherical(angles)
    if not report.verdict:
        raise InvalidTetrahedronException(
            f"not spherical: {'; '.join(report.messages)}", report
        )

    a = angles.a
    q = q_coefficients(a)
    z0 = z_aux(q)

    warnings: list[str] = []
    arg = arg_neg_q2(q.q2, warnings)
    raw = (
        -L_eval(a, z0).real
        + math.pi * (arg + 0.5 * sum(angles.theta))
        - 1.5 * PI_SQUARED
    )

    return VolumeResult(
        volume=reduce_volume(raw, warnings),
        z0=z0,
        arg_neg_q2=arg,
        det_g=report.det_gram,
        raw_value=raw,
        branch_warnings=warnings,
        formula="angles",
    )
