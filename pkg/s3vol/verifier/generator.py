"""Seeded random spherical tetrahedra.

Four vertices are drawn as normalized Gaussian vectors in R⁴ from numpy's
PCG64 generator (`numpy.random.default_rng(seed)`); the edge joining the
vertices opposite faces p and q gets length arccos <v_p, v_q>.
"""

import math

from loguru import logger
import numpy as np
from s3vol import settings
from s3vol.exceptions import S3VolException
from s3vol.gram_geometry import (
    EDGE_INDEX_MAP,
    DihedralAngles,
    EdgeLengths,
    angles_from_lengths,
    gram_from_angles,
)


def lengths_from_vertices(vertices: np.ndarray) -> EdgeLengths:
    """Edge lengths of the tetrahedron spanned by four unit vectors (rows)."""
    vertex_gram = vertices @ vertices.T
    return EdgeLengths(
        l=tuple(
            math.acos(min(1.0, max(-1.0, float(vertex_gram[p - 1, q - 1]))))
            for p, q in (index.cofactor for index in EDGE_INDEX_MAP.values())
        )
    )


def random_valid_tetrahedron(seed: int) -> tuple[DihedralAngles, EdgeLengths]:
    """Draw a spherical tetrahedron whose vertex and face Gram determinants
    are both at least GENERATOR_MIN_DET."""
    rng = np.random.default_rng(seed)
    min_det = settings.GENERATOR_MIN_DET
    attempt = 0

    while True:
        attempt += 1
        vertices = rng.standard_normal((4, 4))
        vertices /= np.linalg.norm(vertices, axis=1, keepdims=True)

        vertex_det = float(np.linalg.det(vertices @ vertices.T))
        if vertex_det < min_det:
            logger.debug(f"seed {seed}, attempt {attempt}: vertex det {vertex_det:.3e}")
            continue

        try:
            lengths = lengths_from_vertices(vertices)
            angles = angles_from_lengths(lengths)
        except S3VolException as e:
            logger.debug(f"seed {seed}, attempt {attempt}: {e}")
            continue

        face_det = gram_from_angles(angles).det
        if face_det < min_det:
            logger.debug(f"seed {seed}, attempt {attempt}: face det {face_det:.3e}")
            continue

        return angles, lengths
