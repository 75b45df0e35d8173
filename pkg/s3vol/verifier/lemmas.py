"""Residuals of the identities behind the dihedral-angle volume formula."""

from collections.abc import Sequence
import cmath
import math

from s3vol.dihedral_volume import (
    V_eval,
    a_dDelta_da,
    dU_dtheta,
    eqz_rational,
    phi,
    psi,
    q_coefficients,
    volume_from_angles,
    z_aux,
    z_dL_dz,
)
from s3vol.gram_geometry import (
    DihedralAngles,
    eq6_exp2il,
    gram_from_angles,
    lengths_from_angles,
)
from s3vol.utils._types import Unit6
from s3vol.verifier.models import SuiteReport
from s3vol.verifier.residuals import (
    DERIVATIVE_BOUND,
    DUALITY_BOUND,
    IDENTITY_BOUND,
    SCHLAFLI_BOUND,
    circular_distance,
    duality_residual,
    evaluate,
    flag_degeneracy,
    require_valid,
    schlafli_residual,
)


EDGES = range(1, 7)


def phi_psi(a: Unit6, z0: complex, j: int = 1) -> tuple[complex, complex]:
    """The rational functions φⱼ and ψⱼ; φⱼ ψⱼ² equals exp(2i lⱼ)."""
    return phi(a, j), psi(a, z0, j)


def lemma_suite(angles: DihedralAngles | Sequence[float]) -> SuiteReport:
    """Check the auxiliary identities on one tetrahedron.

    The unit constraint on z0, the quadratic equation for z0, z ∂U/∂z = πi,
    Im(4 aⱼ ∂Δ/∂aⱼ) = -2π, φⱼ ψⱼ² = exp(2i lⱼ), ∂U/∂θⱼ = (2π - lⱼ)/2,
    the discriminant identity q1² - 4 q0 q2 = 16 det G, the reality of V, the
    Schläfli gradient and the volume relation with the dual tetrahedron.
    Residuals that cannot be evaluated are reported as None with a flag.
    """
    angles = require_valid(angles)
    a = angles.a
    q = q_coefficients(a)
    z0 = z_aux(q)
    lengths = lengths_from_angles(angles).l
    det_gram = gram_from_angles(angles).det

    report = SuiteReport(suite="lemma", angles=angles.theta)
    report.details.update(detG=det_gram, z0_abs=abs(z0))
    flag_degeneracy(report, det_gram)

    evaluate(report, "z0_margin", lambda: 1 - abs(z0), 0.0, kind="margin")
    evaluate(report, "z0_equation", lambda: abs(eqz_rational(a, z0) - 1), IDENTITY_BOUND)
    evaluate(
        report, "z_dU_dz", lambda: abs(z_dL_dz(a, z0) - math.pi * 1j), IDENTITY_BOUND
    )
    evaluate(
        report,
        "im_a_dDelta_da",
        lambda: max(abs((4 * a_dDelta_da(a, j)).imag + 2 * math.pi) for j in EDGES),
        IDENTITY_BOUND,
    )

    def exp2il(j: int) -> complex:
        phi_j, psi_j = phi_psi(a, z0, j)
        return phi_j * psi_j**2

    def phi_psi_residual(j: int) -> float:
        return abs(exp2il(j) - cmath.exp(2j * lengths[j - 1]))

    def dU_dtheta_residual(j: int) -> float:  # noqa: N802
        return abs(dU_dtheta(a, z0, j) - (2 * math.pi - lengths[j - 1]) / 2)

    evaluate(report, "phi_psi_edge1", lambda: phi_psi_residual(1), IDENTITY_BOUND)
    evaluate(
        report,
        "phi_psi",
        lambda: max(phi_psi_residual(j) for j in EDGES),
        IDENTITY_BOUND,
    )
    evaluate(
        report,
        "phi_psi_cofactor",
        lambda: max(abs(exp2il(j) - eq6_exp2il(angles, j)) for j in EDGES),
        IDENTITY_BOUND,
    )
    evaluate(report, "dU_dtheta_edge1", lambda: dU_dtheta_residual(1), DERIVATIVE_BOUND)
    evaluate(
        report,
        "dU_dtheta",
        lambda: max(dU_dtheta_residual(j) for j in EDGES),
        DERIVATIVE_BOUND,
    )
    evaluate(
        report,
        "discriminant",
        lambda: abs(q.q1**2 - 4 * q.q0 * q.q2 - 16 * det_gram) / (16 * det_gram),
        IDENTITY_BOUND,
    )

    evaluate(report, "im_V", lambda: abs(V_eval(a).imag), IDENTITY_BOUND)
    evaluate(
        report,
        "re_V_volume",
        lambda: circular_distance(V_eval(a).real, volume_from_angles(angles).volume),
        IDENTITY_BOUND * 10,
    )
    evaluate(report, "schlafli", lambda: schlafli_residual(angles), SCHLAFLI_BOUND)
    evaluate(report, "duality", lambda: duality_residual(angles), DUALITY_BOUND)

    return report
