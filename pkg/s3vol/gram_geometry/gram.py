"""Gram matrix construction, spherical validity, angle/length conversion and duality."""

from collections.abc import Sequence
import math

from loguru import logger
import numpy as np
from s3vol import settings
from s3vol.exceptions import (
    ConsistencyException,
    InvalidTetrahedronException,
)
from s3vol.gram_geometry.index_map import (
    EDGE_INDEX_MAP,
    VERTEX_TRIPLES,
    edge_between_faces,
    sigma,
)
from s3vol.gram_geometry.models import (
    DihedralAngles,
    EdgeLengths,
    GramMatrix,
    ValidityReport,
)


def _as_angles(angles: DihedralAngles | Sequence[float]) -> DihedralAngles:
    if isinstance(angles, DihedralAngles):
        return angles
    return DihedralAngles.from_sequence(angles)


def _raw_values(angles: DihedralAngles | Sequence[float]) -> tuple[float, ...]:
    if isinstance(angles, DihedralAngles):
        return angles.theta
    return tuple(float(value) for value in angles)


def _gram_array(theta: Sequence[float]) -> np.ndarray:
    g = np.eye(4)
    for j, index in EDGE_INDEX_MAP.items():
        p, q = index.gram
        g[p - 1, q - 1] = g[q - 1, p - 1] = -math.cos(theta[j - 1])
    return g


def gram_from_angles(angles: DihedralAngles | Sequence[float]) -> GramMatrix:
    """Gram matrix with unit diagonal and -cos θⱼ at the Gram position of edge j."""
    return GramMatrix(g=_gram_array(_as_angles(angles).theta))


def cofactor(gram: GramMatrix | np.ndarray, a: int, b: int) -> float:
    """Cofactor c_ab of a Gram matrix (1-based indices)."""
    if not isinstance(gram, GramMatrix):
        gram = GramMatrix(g=gram)
    return gram.cofactor(a, b)


def vertex_conditions(theta: Sequence[float]) -> dict[str, bool]:
    """Check the angle triples at the four vertices.

    For dihedral angles u, v, w at a common vertex:
    0 < u + v - w, u - v + w, -u + v + w < π and π < u + v + w < 3π.
    Genuine tetrahedra can fail the lower pairwise bound (a vertex triangle
    only needs B + C - A < π), so the result never decides validity.
    """
    conditions = {}
    for triple in VERTEX_TRIPLES:
        u, v, w = (theta[j - 1] for j in triple)
        pairwise = (u + v - w, u - v + w, -u + v + w)
        conditions[f"{triple}"] = all(0 < s < math.pi for s in pairwise) and (
            math.pi < u + v + w < 3 * math.pi
        )
    return conditions


def is_spherical(angles: DihedralAngles | Sequence[float]) -> ValidityReport:
    """Test whether six angles are the dihedral angles of a spherical tetrahedron.

    The verdict is positive definiteness of G (all leading principal minors > 0)
    on in-range, non-degenerate input; the vertex triple conditions are reported
    alongside as diagnostics. Invalid input never raises.
    """
    theta = _raw_values(angles)
    messages: list[str] = []

    if len(theta) != 6 or not all(math.isfinite(t) for t in theta):
        return ValidityReport(
            verdict=False,
            in_range=False,
            positive_definite=False,
            degenerate=False,
            messages=["six finite values are required"],
        )

    in_range = all(0 < t < math.pi for t in theta)
    if not in_range:
        messages.append("angles outside (0, π)")

    g = _gram_array(theta)
    minors = tuple(float(np.linalg.det(g[:k, :k])) for k in range(1, 5))
    det_gram = minors[-1]
    positive_definite = all(minor > 0 for minor in minors)
    degenerate = 0 < det_gram < settings.DEGENERACY_TOLERANCE

    if det_gram < 0:
        messages.append("det G < 0")
    elif not positive_definite:
        messages.append("Gram matrix is not positive definite")
    if degenerate:
        messages.append(f"numerically degenerate: det G = {det_gram:.3e}")

    conditions = vertex_conditions(theta)
    failed = [triple for triple, ok in conditions.items() if not ok]
    if failed:
        messages.append(f"vertex conditions fail at {', '.join(failed)}")

    verdict = in_range and positive_definite and not degenerate
    if verdict and failed:
        logger.debug(
            f"Positive definite Gram matrix with failing vertex conditions: {failed}."
        )

    return ValidityReport(
        verdict=verdict,
        in_range=in_range,
        positive_definite=positive_definite,
        degenerate=degenerate,
        det_gram=det_gram,
        leading_minors=minors,
        vertex_conditions=conditions,
        messages=messages,
    )


def _require_spherical(
    angles: DihedralAngles | Sequence[float], context: str = "not spherical"
) -> ValidityReport:
    report = is_spherical(angles)
    if not report.verdict:
        raise InvalidTetrahedronException(
            f"{context}: {'; '.join(report.messages)}", report
        )
    return report


def lengths_from_angles(angles: DihedralAngles | Sequence[float]) -> EdgeLengths:
    """Edge lengths from dihedral angles via cos lⱼ = c_pq / sqrt(c_pp c_qq)."""
    angles = _as_angles(angles)
    report = _require_spherical(angles)
    gram = gram_from_angles(angles)

    lengths = []
    for j, index in EDGE_INDEX_MAP.items():
        p, q = index.cofactor
        c_pp, c_qq, c_pq = gram.cofactor(p, p), gram.cofactor(q, q), gram.cofactor(p, q)

        if c_pp <= 0 or c_qq <= 0:
            raise InvalidTetrahedronException(
                f"non-positive diagonal cofactor for edge {j}: "
                f"c_{p}{p} = {c_pp}, c_{q}{q} = {c_qq}",
                report,
            )

        scale = c_pp * c_qq
        residual = c_pq**2 - scale + report.det_gram * math.sin(angles.theta[j - 1]) ** 2
        if abs(residual) > settings.CONSISTENCY_TOLERANCE * scale:
            raise ConsistencyException(
                f"Cofactor identity fails for edge {j}: residual {residual:.3e}."
            )

        cos_l = min(1.0, max(-1.0, c_pq / math.sqrt(scale)))
        lengths.append(math.acos(cos_l))

    return EdgeLengths(l=tuple(lengths))


def eq6_exp2il(angles: DihedralAngles | Sequence[float], j: int) -> complex:
    """exp(2i lⱼ) as the cofactor expression

    (2 c_pq² - c_pp c_qq + 2i c_pq sqrt(det G) sin θⱼ) / (c_pp c_qq).
    """
    angles = _as_angles(angles)
    gram = gram_from_angles(angles)
    p, q = EDGE_INDEX_MAP[j].cofactor
    c_pp, c_qq, c_pq = gram.cofactor(p, p), gram.cofactor(q, q), gram.cofactor(p, q)
    sqrt_det = math.sqrt(max(gram.det, 0.0))

    return complex(
        2 * c_pq**2 - c_pp * c_qq,
        2 * c_pq * sqrt_det * math.sin(angles.theta[j - 1]),
    ) / (c_pp * c_qq)


def dual_angle_vector(lengths: EdgeLengths | Sequence[float]) -> tuple[float, ...]:
    """Dihedral angles of the dual tetrahedron: θ*ⱼ = π - l_σ(j)."""
    values = lengths.l if isinstance(lengths, EdgeLengths) else tuple(lengths)
    return tuple(math.pi - values[sigma(j) - 1] for j in range(1, 7))


def angles_from_lengths(lengths: EdgeLengths | Sequence[float]) -> DihedralAngles:
    """Dihedral angles from edge lengths through the dual tetrahedron.

    The dual angle vector is converted to dual lengths l*, and θⱼ = π - l*_σ(j).
    """
    if not isinstance(lengths, EdgeLengths):
        lengths = EdgeLengths.from_sequence(lengths)

    dual_theta = dual_angle_vector(lengths)
    _require_spherical(
        dual_theta, context="no spherical tetrahedron has these edge lengths"
    )
    dual_lengths = lengths_from_angles(dual_theta)

    return DihedralAngles(
        theta=tuple(math.pi - dual_lengths.l[sigma(j) - 1] for j in range(1, 7))
    )


def dual(
    angles: DihedralAngles, lengths: EdgeLengths, atol: float = 1e-8
) -> tuple[DihedralAngles, EdgeLengths]:
    """Dual tetrahedron T*: θ*ⱼ = π - l_σ(j) and l*ⱼ = π - θ_σ(j)."""
    expected = lengths_from_angles(angles)
    mismatch = max(abs(x - y) for x, y in zip(expected.l, lengths.l))
    if mismatch > atol:
        raise InvalidTetrahedronException(
            f"angles and lengths describe different tetrahedra (mismatch {mismatch:.3e})"
        )

    dual_angles = DihedralAngles(theta=dual_angle_vector(lengths))
    dual_lengths = EdgeLengths(
        l=tuple(math.pi - angles.theta[sigma(j) - 1] for j in range(1, 7))
    )
    return dual_angles, dual_lengths


def permute_faces(
    angles: DihedralAngles, permutation: Sequence[int]
) -> DihedralAngles:
    """Relabel the faces by a permutation of (1, 2, 3, 4).

    Face a becomes face permutation[a-1]; the angle at the edge on faces (a, b)
    moves to the edge on faces (permutation[a-1], permutation[b-1]).
    """
    if sorted(permutation) != [1, 2, 3, 4]:
        raise ValueError(f"Not a permutation of the faces: {permutation}.")

    theta = [0.0] * 6
    for j, index in EDGE_INDEX_MAP.items():
        a, b = index.gram
        target = edge_between_faces(permutation[a - 1], permutation[b - 1])
        theta[target - 1] = angles.theta[j - 1]

    return DihedralAngles(theta=tuple(theta))
