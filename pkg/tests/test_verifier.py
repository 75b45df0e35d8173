"""Tests for the Monte-Carlo oracle, the generator and the verification suites."""

import json
import math
import time

from hypothesis import given, settings as hypothesis_settings
import numpy as np
import pytest
from s3vol import settings
from s3vol.dihedral_volume import volume_from_angles
from s3vol.exceptions import (
    DegenerateTetrahedronException,
    InvalidTetrahedronException,
)
from s3vol.gram_geometry import gram_from_angles, lengths_from_angles
from s3vol.verifier import (
    VOLUME_OF_S3,
    duality_residual,
    duality_suite,
    lemma_suite,
    montecarlo_suite,
    montecarlo_volume,
    normals_from_gram,
    orientation_sign,
    phi_psi,
    random_valid_tetrahedron,
    schlafli_suite,
)
from tests.utils import PI_SQUARED, REGULAR_60, REGULAR_120, RIGHT, regular, seeds


NEAR_DEGENERATE = regular(math.acos(1 / 3 - 1.4e-5))


@hypothesis_settings(max_examples=25, deadline=None)
@given(seeds)
def test_normals_reconstruct_the_gram_matrix(seed):
    angles, _ = random_valid_tetrahedron(seed)
    g = gram_from_angles(angles)
    normals = normals_from_gram(g)
    assert normals.reconstruction_residual(g.g) <= 1e-12
    assert np.allclose(np.linalg.norm(normals.vectors, axis=1), 1, atol=1e-12)


def test_normals_of_identity_are_the_standard_basis():
    normals = normals_from_gram(np.eye(4))
    assert np.array_equal(normals.vectors, np.eye(4))


def test_normals_reject_indefinite_gram():
    g = 1.5 * np.eye(4) - 0.5 * np.ones((4, 4))
    with pytest.raises(DegenerateTetrahedronException):
        normals_from_gram(g)


def test_orientation_sign_is_cached():
    assert orientation_sign() in (1, -1)
    assert orientation_sign.cache_info().currsize == 1


def test_montecarlo_right_tetrahedron():
    estimate = montecarlo_volume(RIGHT, n=1_000_000, seed=0)
    assert estimate.n == 1_000_000
    assert estimate.estimate == pytest.approx(VOLUME_OF_S3 * estimate.hits / estimate.n)
    assert abs(estimate.estimate - PI_SQUARED / 8) <= 4 * estimate.stderr


def test_montecarlo_regular_120():
    estimate = montecarlo_volume(REGULAR_120, n=1_000_000, seed=7)
    volume = volume_from_angles(REGULAR_120).volume
    assert abs(estimate.estimate - volume) <= 4 * estimate.stderr


def test_montecarlo_counts_do_not_depend_on_workers():
    serial = montecarlo_volume(RIGHT, n=200_000, seed=3, workers=1, chunk_size=30_000)
    parallel = montecarlo_volume(
        RIGHT, n=200_000, seed=3, workers=4, chunk_size=30_000
    )
    assert serial.hits == parallel.hits


def test_montecarlo_is_reproducible():
    first = montecarlo_volume(REGULAR_120, n=50_000, seed=11)
    second = montecarlo_volume(REGULAR_120, n=50_000, seed=11)
    assert first == second


def test_montecarlo_preconditions():
    with pytest.raises(ValueError):
        montecarlo_volume(RIGHT, n=9_999, seed=0)
    with pytest.raises(InvalidTetrahedronException):
        montecarlo_volume(REGULAR_60, n=10_000, seed=0)


@pytest.mark.slow
def test_montecarlo_contract_on_random_tetrahedra():
    agreements = 0
    for seed in range(50):
        angles, _ = random_valid_tetrahedron(seed)
        start = time.perf_counter()
        estimate = montecarlo_volume(angles, n=4_000_000, seed=seed, workers=1)
        assert time.perf_counter() - start < 5
        volume = volume_from_angles(angles).volume
        agreements += abs(estimate.estimate - volume) <= 4 * estimate.stderr
    assert agreements >= 48


def test_montecarlo_stderr_follows_square_root_law():
    small = montecarlo_volume(REGULAR_120, n=100_000, seed=1)
    large = montecarlo_volume(REGULAR_120, n=400_000, seed=1)
    assert large.stderr / small.stderr == pytest.approx(0.5, rel=0.1)


def test_generator_is_deterministic():
    assert random_valid_tetrahedron(42) == random_valid_tetrahedron(42)
    assert random_valid_tetrahedron(42) != random_valid_tetrahedron(43)


@hypothesis_settings(max_examples=50, deadline=None)
@given(seeds)
def test_generator_output_is_well_conditioned(seed):
    angles, lengths = random_valid_tetrahedron(seed)
    assert gram_from_angles(angles).det >= settings.GENERATOR_MIN_DET
    assert lengths_from_angles(angles).l == pytest.approx(lengths.l, abs=1e-9)


def test_phi_psi_right_tetrahedron():
    phi_1, psi_1 = phi_psi((1j,) * 6, (1 + 1j) / 2)
    assert phi_1 * psi_1**2 == pytest.approx(-1, abs=1e-14)


def test_lemma_suite_right_tetrahedron():
    report = lemma_suite(RIGHT)
    assert report.passed
    assert report.flags == []
    assert all(r.value is not None for r in report.residuals)
    assert {r.name for r in report.residuals} >= {
        "z0_margin",
        "z0_equation",
        "z_dU_dz",
        "im_a_dDelta_da",
        "phi_psi",
        "dU_dtheta",
        "discriminant",
        "im_V",
        "schlafli",
        "duality",
    }


@hypothesis_settings(max_examples=100, deadline=None)
@given(seeds)
def test_lemma_suite_on_random_tetrahedra(seed):
    angles, _ = random_valid_tetrahedron(seed)
    report = lemma_suite(angles)
    failed = [r for r in report.residuals if not r.passed]
    assert not failed, failed


@hypothesis_settings(max_examples=10, deadline=None)
@given(seeds)
def test_schlafli_and_duality_suites(seed):
    angles, _ = random_valid_tetrahedron(seed)
    assert schlafli_suite(angles).passed
    assert duality_suite(angles).passed


def test_duality_relation_on_random_sample(random_sample):
    assert max(duality_residual(angles) for angles, _ in random_sample) < 1e-9


def test_suites_flag_near_degenerate_input():
    assert gram_from_angles(NEAR_DEGENERATE).det == pytest.approx(1e-4, rel=0.01)

    for report in (lemma_suite(NEAR_DEGENERATE), duality_suite(NEAR_DEGENERATE)):
        assert any(flag.startswith("near-degenerate") for flag in report.flags)
        assert all(
            math.isfinite(r.value) for r in report.residuals if r.value is not None
        )


def test_suites_reject_invalid_angles():
    with pytest.raises(InvalidTetrahedronException):
        lemma_suite(REGULAR_60)


def test_montecarlo_suite_report():
    report = montecarlo_suite(RIGHT, n=200_000, seed=5)
    assert report.passed
    assert report.details["n"] == 200_000
    assert report.details["volume"] == pytest.approx(PI_SQUARED / 8)


def test_suite_report_serializes_to_json():
    data = json.loads(json.dumps(lemma_suite(RIGHT).to_json_dict()))
    assert data["suite"] == "lemma"
    assert data["passed"] is True
    assert all(entry["passed"] for entry in data["residuals"])
