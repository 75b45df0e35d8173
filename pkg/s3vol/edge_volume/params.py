"""Substitution of edge lengths into the dihedral angle formula stack."""

from collections.abc import Sequence

from pydantic import BaseModel, ConfigDict
from s3vol.dihedral_volume import QCoefficients, q_coefficients, z_aux
from s3vol.dihedral_volume.derivatives import a_dL_da
from s3vol.dihedral_volume.formulas import L_eval
from s3vol.exceptions import InvalidTetrahedronException
from s3vol.gram_geometry import EdgeLengths, is_spherical, sigma
from s3vol.gram_geometry.gram import dual_angle_vector


class TildeParams(BaseModel):
    """bⱼ = exp(ilⱼ), ãⱼ = -1/b_σ(j) and the quantities built from ã."""

    model_config = ConfigDict(frozen=True)

    b: tuple[complex, ...]
    atilde: tuple[complex, ...]
    q: QCoefficients
    z0: complex
    det_dual_gram: float


def _as_lengths(lengths: EdgeLengths | Sequence[float]) -> EdgeLengths:
    if isinstance(lengths, EdgeLengths):
        return lengths
    return EdgeLengths.from_sequence(lengths)


def tilde_params(lengths: EdgeLengths | Sequence[float]) -> TildeParams:
    """ã, q̃ and z̃0 for a length vector.

    ãⱼ = exp(i(π - l_σ(j))) are the a-parameters of the dual tetrahedron,
    whose validity is checked first.
    """
    lengths = _as_lengths(lengths)

    report = is_spherical(dual_angle_vector(lengths))
    if not report.verdict:
        raise InvalidTetrahedronException(
            "no spherical tetrahedron has these edge lengths: "
            f"{'; '.join(report.messages)}",
            report,
        )

    b = lengths.b
    atilde = tuple(-1 / b[sigma(j) - 1] for j in range(1, 7))
    q = q_coefficients(atilde)

    return TildeParams(
        b=b, atilde=atilde, q=q, z0=z_aux(q), det_dual_gram=report.det_gram
    )


def L_tilde(b: Sequence[complex], z: complex) -> complex:  # noqa: N802
    """L̃(b, z) = L(-1/b4, -1/b5, -1/b6, -1/b1, -1/b2, -1/b3, z)."""
    return L_eval(tuple(-1 / b[sigma(j) - 1] for j in range(1, 7)), z)


def dReL_dl(  # noqa: N802
    lengths: EdgeLengths | Sequence[float],
    j: int,
    params: TildeParams | None = None,
) -> float:
    """∂ Re L̃ / ∂lⱼ with z held at z̃0.

    Only ã_σ(j) = exp(i(π - lⱼ)) depends on lⱼ, so the derivative is
    -Re(∂L/∂θ_σ(j)) = -Re(i ã ∂L/∂ã) at index σ(j).
    """
    if params is None:
        params = tilde_params(lengths)
    return -(1j * a_dL_da(params.atilde, params.z0, sigma(j))).real
