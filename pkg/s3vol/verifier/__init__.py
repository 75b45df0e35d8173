"""Oracles and verification suites: Monte-Carlo volume, random tetrahedra, residuals."""

from s3vol.verifier.generator import lengths_from_vertices, random_valid_tetrahedron
from s3vol.verifier.lemmas import lemma_suite, phi_psi
from s3vol.verifier.models import FaceNormals, McEstimate, Residual, SuiteReport
from s3vol.verifier.montecarlo import (
    VOLUME_OF_S3,
    montecarlo_volume,
    normals_from_gram,
    orientation_sign,
)
from s3vol.verifier.residuals import duality_residual, schlafli_residual
from s3vol.verifier.suites import duality_suite, montecarlo_suite, schlafli_suite
