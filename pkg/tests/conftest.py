"""Pytest fixtures for s3vol."""

from loguru import logger
import pytest
from s3vol.gram_geometry import DihedralAngles
from s3vol.verifier import random_valid_tetrahedron
from tests.utils import REGULAR_120, RIGHT


@pytest.fixture(autouse=True)
def _reset_loguru():
    """Drop sinks that tests installed on captured streams."""
    yield
    logger.remove()


@pytest.fixture
def right_angles() -> DihedralAngles:
    return DihedralAngles(theta=RIGHT)


@pytest.fixture
def regular_120() -> DihedralAngles:
    return DihedralAngles(theta=REGULAR_120)


@pytest.fixture(scope="session")
def random_sample() -> list:
    """One thousand seeded random tetrahedra as (angles, lengths) pairs."""
    return [random_valid_tetrahedron(seed) for seed in range(1000)]
