"""Tests for the principal logarithm and dilogarithm."""

import cmath
import math

from hypothesis import assume, given, strategies as st
import pytest
from s3vol.czmath import dilog, im_log1p_unit, plog, re_dilog_unit
from s3vol.exceptions import DomainException
from scipy.special import spence
from tests.utils import CATALAN, GIESEKING, PI_SQUARED


complex_args = st.complex_numbers(
    max_magnitude=8, allow_nan=False, allow_infinity=False
)
unit_angles = st.floats(min_value=1e-6, max_value=2 * math.pi - 1e-6)


def close(x: complex, y: complex, tol: float = 1e-14) -> bool:
    return abs(x - y) <= tol * max(1.0, abs(y))


@pytest.mark.parametrize(
    ["z", "expected"],
    [
        (1j, 1j * math.pi / 2),
        (-1, 1j * math.pi),
        (complex(-1, -0.0), 1j * math.pi),
        ((1 + 1j) / 2, complex(-math.log(2) / 2, math.pi / 4)),
    ],
)
def test_plog_principal_branch(z, expected):
    assert close(plog(z), expected)


@pytest.mark.parametrize("z", [0, 0j, complex("nan"), complex("inf"), float("inf")])
def test_plog_domain_errors(z):
    with pytest.raises(DomainException):
        plog(z)


@pytest.mark.parametrize(
    ["z", "expected"],
    [
        (0, 0),
        (-1, -PI_SQUARED / 12),
        (1, PI_SQUARED / 6),
        (0.5, PI_SQUARED / 12 - math.log(2) ** 2 / 2),
        (1j, complex(-PI_SQUARED / 48, CATALAN)),
        (
            (1 + 1j) / 2,
            complex(
                5 * PI_SQUARED / 96 - math.log(2) ** 2 / 8,
                CATALAN - math.pi * math.log(2) / 8,
            ),
        ),
        (cmath.exp(1j * math.pi / 3), complex(PI_SQUARED / 36, GIESEKING)),
        (cmath.exp(2j * math.pi / 3), complex(-PI_SQUARED / 18, 2 * GIESEKING / 3)),
    ],
)
def test_dilog_anchor_values(z, expected):
    assert close(dilog(z), expected)


@pytest.mark.parametrize(
    "z", [1.5, 2, 1 + 1e-9, complex("nan"), complex(1, float("inf"))]
)
def test_dilog_domain_errors(z):
    with pytest.raises(DomainException):
        dilog(z)


@given(complex_args)
def test_dilog_against_scipy_spence(z):
    assume(z.real < 1 or abs(z.imag) > 1e-9)
    assume(abs(1 - z) > 1e-8)
    assert close(dilog(z), complex(spence(1 - z)), tol=1e-12)


@given(complex_args)
def test_dilog_conjugation_symmetry(z):
    assume(z.real < 1 or abs(z.imag) > 1e-9)
    assert close(dilog(z.conjugate()), dilog(z).conjugate(), tol=1e-13)


@given(unit_angles)
def test_re_dilog_on_unit_circle(theta):
    assert abs(dilog(cmath.exp(1j * theta)).real - re_dilog_unit(theta)) <= 1e-12


@given(st.complex_numbers(max_magnitude=0.99, allow_nan=False, allow_infinity=False))
def test_dilog_reflection_relation(z):
    assume(abs(z) > 1e-9)
    lhs = dilog(z) + dilog(1 - z) + plog(z) * plog(1 - z)
    assert abs(lhs - PI_SQUARED / 6) <= 1e-12


@given(st.complex_numbers(max_magnitude=0.5, allow_nan=False, allow_infinity=False))
def test_dilog_matches_series_in_half_disk(z):
    series = sum(z**k / k**2 for k in range(1, 61))
    assert abs(dilog(z) - series) <= 1e-15


def test_re_dilog_unit_is_even_and_periodic():
    for theta in (0.3, 1.7, 2.9):
        assert re_dilog_unit(-theta) == pytest.approx(re_dilog_unit(theta), abs=1e-15)
        assert re_dilog_unit(theta + 2 * math.pi) == pytest.approx(
            re_dilog_unit(theta), abs=1e-12
        )


@given(st.floats(min_value=-3 * math.pi, max_value=3 * math.pi))
def test_im_log1p_unit(theta):
    assume(abs(math.remainder(theta - math.pi, 2 * math.pi)) > 1e-6)
    expected = plog(1 + cmath.exp(1j * theta)).imag
    assert abs(im_log1p_unit(theta) - expected) <= 1e-12


def test_im_log1p_unit_undefined_at_pi():
    with pytest.raises(DomainException):
        im_log1p_unit(math.pi)
