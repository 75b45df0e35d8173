"""The functions q, z0, L, Δ0, Δ, U and V of the dihedral angle formula.

All functions take a = (a1, ..., a6), aⱼ = exp(iθⱼ), indexed by edge label minus one.
Logarithms and dilogarithms are principal.
"""

from collections.abc import Iterable, Sequence
import math

from s3vol import settings
from s3vol.czmath import dilog, plog
from s3vol.dihedral_volume.models import QCoefficients
from s3vol.exceptions import (
    BranchException,
    ConsistencyException,
    DegenerateTetrahedronException,
)
from s3vol.gram_geometry.index_map import EDGE_QUADRUPLES, VERTEX_TRIPLES
from s3vol.utils._types import Unit6


def monomial(a: Sequence[complex], labels: Iterable[int]) -> complex:
    """Product of the aⱼ over 1-based edge labels."""
    return math.prod((a[j - 1] for j in labels), start=1 + 0j)


def inverse(a: Sequence[complex]) -> Unit6:
    return tuple(1 / x for x in a)


def _check_unit(a: Sequence[complex]) -> None:
    if len(a) != 6:
        raise ConsistencyException(f"Six values aⱼ are required; received {len(a)}.")
    for j, x in enumerate(a, start=1):
        if abs(abs(x) - 1) > settings.UNIT_TOLERANCE:
            raise ConsistencyException(f"|a{j}| = {abs(x)!r} is not 1.")


def q_coefficients(a: Unit6) -> QCoefficients:
    """q0, q1, q2 and the discriminant q1² - 4|q0|²."""
    _check_unit(a)
    a1, a2, a3, a4, a5, a6 = a
    b1, b2, b3, b4, b5, b6 = inverse(a)

    q0 = (
        a1 * a4 + a2 * a5 + a3 * a6
        + a1 * a2 * a6 + a1 * a3 * a5 + a2 * a3 * a4
        + a4 * a5 * a6 + a1 * a2 * a3 * a4 * a5 * a6
    )  # fmt: skip
    q1 = -(a1 - b1) * (a4 - b4) - (a2 - b2) * (a5 - b5) - (a3 - b3) * (a6 - b6)
    q2 = (
        b1 * b4 + b2 * b5 + b3 * b6
        + b1 * b2 * b6 + b1 * b3 * b5 + b2 * b3 * b4
        + b4 * b5 * b6 + b1 * b2 * b3 * b4 * b5 * b6
    )  # fmt: skip

    tolerance = settings.CONSISTENCY_TOLERANCE
    if abs(q1.imag) > tolerance * max(1.0, abs(q1)):
        raise ConsistencyException(f"q1 is not real: Im q1 = {q1.imag:.3e}.")
    if abs(q2 - q0.conjugate()) > tolerance * max(1.0, abs(q0)):
        raise ConsistencyException("q2 differs from the conjugate of q0.")

    q1_real = q1.real
    return QCoefficients(
        q0=q0, q1=q1_real, q2=q2, discriminant=q1_real**2 - 4 * abs(q0) ** 2
    )


def z_aux(q: QCoefficients) -> complex:
    """z0 = (-q1 + sqrt(q1² - 4 q0 q2)) / (2 q2) with the positive real root."""
    if q.discriminant <= 0:
        raise DegenerateTetrahedronException(
            f"Non-positive discriminant {q.discriminant:.3e}."
        )
    if abs(q.q2) <= settings.DEGENERACY_TOLERANCE:
        raise DegenerateTetrahedronException("q2 vanishes.")

    numerator = -q.q1 + math.sqrt(q.discriminant)
    if not numerator < 0:
        raise BranchException(
            f"The numerator of z0 must be a negative real; received {numerator!r}."
        )

    z0 = numerator / (2 * q.q2)
    if not abs(z0) < 1:
        raise ConsistencyException(f"|z0| = {abs(z0)!r} is not below 1.")
    return z0


def L_eval(a: Unit6, z: complex) -> complex:  # noqa: N802
    """L(a1, ..., a6, z).

    ½ (Li2(z) + Σ Li2(z / Q) - Σ Li2(-z / T) + Σ log aⱼ log aⱼ₊₃)
    with Q over the three edge quadruples and T over the four vertex triples.
    """
    b = inverse(a)
    positive = dilog(z) + sum(dilog(monomial(b, quad) * z) for quad in EDGE_QUADRUPLES)
    negative = sum(dilog(-monomial(b, triple) * z) for triple in VERTEX_TRIPLES)
    logs = sum(plog(a[j]) * plog(a[j + 3]) for j in range(3))
    return 0.5 * (positive - negative + logs)


def delta0(x: complex, y: complex, z: complex) -> complex:
    """Δ0(x, y, z) = -¼ (Li2(-x/(yz)) + Li2(-y/(xz)) + Li2(-z/(xy)) + Li2(-xyz))."""
    return -0.25 * (
        dilog(-x / (y * z))
        + dilog(-y / (x * z))
        + dilog(-z / (x * y))
        + dilog(-x * y * z)
    )


def delta_eval(a: Unit6) -> complex:
    """Δ(a) = Σ Δ0 over the four vertex triples - ½ Σ (log aⱼ)²."""
    vertex_terms = sum(delta0(*(a[j - 1] for j in triple)) for triple in VERTEX_TRIPLES)
    return vertex_terms - 0.5 * sum(plog(x) ** 2 for x in a)


def delta_real_closed_form(theta: Sequence[float]) -> float:
    """Re Δ on valid angles: -2π²/3 + Σ πθⱼ/2."""
    return -2 * math.pi**2 / 3 + math.pi * sum(theta) / 2


def U_eval(a: Unit6, z: complex) -> complex:  # noqa: N802
    return L_eval(a, z) + delta_eval(a)


def V_eval(a: Unit6) -> complex:  # noqa: N802
    """V(a) = -U(a, z0) + πi (log z0 - Σ log aⱼ) - 13π²/6."""
    z0 = z_aux(q_coefficients(a))
    return (
        -U_eval(a, z0)
        + math.pi * 1j * (plog(z0) - sum(plog(x) for x in a))
        - 13 * math.pi**2 / 6
    )
