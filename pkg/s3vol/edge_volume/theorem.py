"""Volume of a spherical tetrahedron from its edge lengths."""

from collections.abc import Sequence
import math

from s3vol.dihedral_volume import (
    PI_SQUARED,
    VolumeResult,
    arg_neg_q2,
    reduce_volume,
    volume_from_angles,
)
from s3vol.dihedral_volume.formulas import L_eval
from s3vol.edge_volume.params import _as_lengths, dReL_dl, tilde_params
from s3vol.gram_geometry import DihedralAngles, EdgeLengths, lengths_from_angles
from s3vol.gram_geometry.gram import dual_angle_vector


def volume_from_lengths(lengths: EdgeLengths | Sequence[float]) -> VolumeResult:
    """Volume from edge lengths.

    Vol = Re L̃(b, z̃0) - π arg(-q̃2) - Σ lⱼ ∂Re L̃/∂lⱼ|z̃0 - π²/2  mod 2π².
    """
    lengths = _as_lengths(lengths)
    params = tilde_params(lengths)

    warnings: list[str] = []
    arg = arg_neg_q2(params.q.q2, warnings)
    gradient_term = sum(
        l_j * dReL_dl(lengths, j, params=params)
        for j, l_j in enumerate(lengths.l, start=1)
    )
    raw = (
        L_eval(params.atilde, params.z0).real
        - math.pi * arg
        - gradient_term
        - 0.5 * PI_SQUARED
    )

    return VolumeResult(
        volume=reduce_volume(raw, warnings),
        z0=params.z0,
        arg_neg_q2=arg,
        det_g=params.det_dual_gram,
        raw_value=raw,
        branch_warnings=warnings,
        formula="lengths",
    )


def volume_via_dual(angles: DihedralAngles | Sequence[float]) -> float:
    """Volume through the dual tetrahedron: π² - Vol(T*) - ½ Σ lⱼ(π - θⱼ)."""
    if not isinstance(angles, DihedralAngles):
        angles = DihedralAngles.from_sequence(angles)

    lengths = lengths_from_angles(angles)
    dual_volume = volume_from_angles(dual_angle_vector(lengths)).volume
    coupling = 0.5 * sum(
        l_j * (math.pi - theta_j) for l_j, theta_j in zip(lengths.l, angles.theta)
    )
    return PI_SQUARED - dual_volume - coupling
