"""Analytic derivatives of L, Δ and U.

The derivatives are closed sums of principal logarithms; the rational functions
are their exponentials.
"""

import math

from s3vol.czmath import plog
from s3vol.dihedral_volume.formulas import inverse, monomial
from s3vol.gram_geometry.index_map import EDGE_QUADRUPLES, VERTEX_TRIPLES, sigma
from s3vol.utils._types import Unit6


def z_dL_dz(a: Unit6, z: complex) -> complex:  # noqa: N802
    """z ∂L/∂z = ½ (-log(1 - z) - Σ log(1 - z/Q) + Σ log(1 + z/T))."""
    b = inverse(a)
    return 0.5 * (
        -plog(1 - z)
        - sum(plog(1 - monomial(b, quad) * z) for quad in EDGE_QUADRUPLES)
        + sum(plog(1 + monomial(b, triple) * z) for triple in VERTEX_TRIPLES)
    )


def eqz_rational(a: Unit6, z: complex) -> complex:
    """exp(2z ∂L/∂z) as Π (T + z) / ((1 - z) Π (Q - z))."""
    numerator = math.prod(
        (monomial(a, triple) + z for triple in VERTEX_TRIPLES), start=1 + 0j
    )
    denominator = (1 - z) * math.prod(
        (monomial(a, quad) - z for quad in EDGE_QUADRUPLES), start=1 + 0j
    )
    return numerator / denominator


def a_dL_da(a: Unit6, z: complex, j: int) -> complex:  # noqa: N802
    """aⱼ ∂L/∂aⱼ at fixed z for edge label j."""
    b = inverse(a)
    total = (
        sum(plog(1 - monomial(b, quad) * z) for quad in EDGE_QUADRUPLES if j in quad)
        - sum(
            plog(1 + monomial(b, triple) * z)
            for triple in VERTEX_TRIPLES
            if j in triple
        )
        + plog(a[sigma(j) - 1])
    )
    return 0.5 * total


def a_dDelta_da(a: Unit6, j: int) -> complex:  # noqa: N802
    """aⱼ ∂Δ/∂aⱼ for edge label j."""
    x = a[j - 1]
    total = -plog(x)

    for triple in VERTEX_TRIPLES:
        if j not in triple:
            continue
        p, q = (a[k - 1] for k in triple if k != j)
        total += 0.25 * (
            plog(1 + x / (p * q))
            - plog(1 + p / (x * q))
            - plog(1 + q / (x * p))
            + plog(1 + x * p * q)
        )

    return total


def dU_dtheta(a: Unit6, z: complex, j: int) -> complex:  # noqa: N802
    """∂U/∂θⱼ = i aⱼ ∂U/∂aⱼ at fixed z."""
    return 1j * (a_dL_da(a, z, j) + a_dDelta_da(a, j))


def phi(a: Unit6, j: int) -> complex:
    """φⱼ = exp(4 aⱼ ∂Δ/∂aⱼ) as a rational function.

    Π over the two vertex triples (j, p, q) of
    (aⱼ + a_p a_q)(aⱼ a_p a_q + 1) / ((aⱼ a_p + a_q)(aⱼ a_q + a_p)).
    """
    x = a[j - 1]
    value = 1 + 0j
    for triple in VERTEX_TRIPLES:
        if j not in triple:
            continue
        p, q = (a[k - 1] for k in triple if k != j)
        value *= (x + p * q) * (x * p * q + 1) / ((x * p + q) * (x * q + p))
    return value


def psi(a: Unit6, z0: complex, j: int) -> complex:
    """ψⱼ = exp(2 aⱼ ∂L/∂aⱼ) at z = z0 as a rational function.

    Π (Q - z0) over the two quadruples through j, divided by
    a_σ(j) Π (T + z0) over the two vertex triples through j.
    """
    numerator = math.prod(
        (monomial(a, quad) - z0 for quad in EDGE_QUADRUPLES if j in quad),
        start=1 + 0j,
    )
    denominator = a[sigma(j) - 1] * math.prod(
        (monomial(a, triple) + z0 for triple in VERTEX_TRIPLES if j in triple),
        start=1 + 0j,
    )
    return numerator / denominator
