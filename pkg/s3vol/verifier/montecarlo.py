"""Monte-Carlo volume oracle on S³.

Points are normalized 4-dimensional Gaussian deviates; a point lies in the
tetrahedron when <u_a, x> <= 0 for all four outward face normals u_a.
The sample is split into fixed-size chunks, chunk k drawing from the k-th
PCG64 stream spawned from SeedSequence(seed), so hit counts do not depend on
the number of workers.
"""

from collections.abc import Sequence
from concurrent.futures import ThreadPoolExecutor
from functools import cache
import math

from loguru import logger
import numpy as np
from s3vol import settings
from s3vol.exceptions import (
    ConsistencyException,
    DegenerateTetrahedronException,
    InvalidTetrahedronException,
)
from s3vol.gram_geometry import (
    DihedralAngles,
    GramMatrix,
    gram_from_angles,
    is_spherical,
)
from s3vol.verifier.models import FaceNormals, McEstimate


VOLUME_OF_S3 = 2 * math.pi**2
MIN_SAMPLES = 10_000


def normals_from_gram(gram: GramMatrix | np.ndarray) -> FaceNormals:
    """Rows of the lower Cholesky factor of G as unit face normals."""
    g = gram.g if isinstance(gram, GramMatrix) else np.asarray(gram, dtype=float)

    try:
        factor = np.linalg.cholesky(g)
    except np.linalg.LinAlgError as e:
        raise DegenerateTetrahedronException(
            "Gram matrix is not positive definite."
        ) from e

    pivot = float(np.min(np.diag(factor)))
    if pivot < settings.DEGENERACY_TOLERANCE:
        raise DegenerateTetrahedronException(f"Cholesky pivot {pivot:.3e} too small.")

    return FaceNormals(vectors=factor)


def _chunk_sizes(n: int, chunk_size: int) -> list[int]:
    sizes = [chunk_size] * (n // chunk_size)
    if n % chunk_size:
        sizes.append(n % chunk_size)
    return sizes


def _count_hits(
    normals: np.ndarray, seed_sequence: np.random.SeedSequence, size: int, sign: int
) -> int:
    rng = np.random.Generator(np.random.PCG64(seed_sequence))
    x = rng.standard_normal((size, 4))
    x /= np.linalg.norm(x, axis=1, keepdims=True)
    inside = np.all(sign * (x @ normals.T) <= 0, axis=1)
    return int(np.count_nonzero(inside))


def _sample(
    normals: np.ndarray,
    n: int,
    seed: int,
    sign: int,
    workers: int = 1,
    chunk_size: int | None = None,
) -> int:
    sizes = _chunk_sizes(n, chunk_size or settings.MC_CHUNK_SIZE)
    streams = np.random.SeedSequence(seed).spawn(len(sizes))

    def count(k: int) -> int:
        hits = _count_hits(normals, streams[k], sizes[k], sign)
        logger.debug(f"Monte-Carlo chunk {k + 1}/{len(sizes)}: {hits} hits.")
        return hits

    if workers <= 1:
        return sum(map(count, range(len(sizes))))

    with ThreadPoolExecutor(max_workers=workers) as executor:
        return sum(executor.map(count, range(len(sizes))))


@cache
def orientation_sign() -> int:
    """Half-space orientation, fixed once on the all-right-angle tetrahedron.

    That tetrahedron is one sixteenth of S³, so the accepted sign must yield a
    hit fraction within 4 standard errors of 1/16.
    """
    n = settings.MC_CALIBRATION_SAMPLES
    p_expected = 1 / 16
    tolerance = 4 * math.sqrt(p_expected * (1 - p_expected) / n)

    for sign in (1, -1):
        p = _sample(np.eye(4), n, seed=0, sign=sign) / n
        if abs(p - p_expected) <= tolerance:
            logger.info(f"Monte-Carlo orientation calibrated: sign {sign}, p = {p}.")
            return sign

    raise ConsistencyException("Monte-Carlo orientation calibration failed.")


def montecarlo_volume(
    angles: DihedralAngles | Sequence[float],
    n: int,
    seed: int,
    workers: int | None = None,
    chunk_size: int | None = None,
) -> McEstimate:
    """Estimate the volume as 2π² hits/n over n uniform points on S³."""
    if n < MIN_SAMPLES:
        raise ValueError(f"At least {MIN_SAMPLES} samples are required; received {n}.")

    report = is_spherical(angles)
    if not report.verdict:
        raise InvalidTetrahedronException(
            f"not spherical: {'; '.join(report.messages)}", report
        )

    normals = normals_from_gram(gram_from_angles(angles)).vectors
    hits = _sample(
        normals,
        n,
        seed,
        sign=orientation_sign(),
        workers=workers or settings.MC_WORKERS,
        chunk_size=chunk_size,
    )

    p = hits / n
    return McEstimate(
        estimate=VOLUME_OF_S3 * p,
        stderr=VOLUME_OF_S3 * math.sqrt(p * (1 - p) / n),
        hits=hits,
        n=n,
        seed=seed,
    )
