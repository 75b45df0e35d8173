"""Shared constants and strategies for the s3vol tests."""

import math

from hypothesis import strategies as st
from s3vol.gram_geometry import DihedralAngles


RIGHT = (math.pi / 2,) * 6
REGULAR_120 = (2 * math.pi / 3,) * 6
REGULAR_60 = (math.pi / 3,) * 6
ARCCOS_MINUS_QUARTER = math.acos(-0.25)

PI_SQUARED = math.pi**2
CATALAN = 0.915965594177219015054603514932
GIESEKING = 1.01494160640965362502120255427

seeds = st.integers(min_value=0, max_value=2**32 - 1)


def regular(theta: float) -> DihedralAngles:
    return DihedralAngles(theta=(theta,) * 6)
