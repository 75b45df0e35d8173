"""Complex scalar helpers: principal logarithm and principal dilogarithm.

Li2 is evaluated by its power series on |z| <= 1/2. Other arguments are mapped
into the closed unit disk by the inversion relation and, for Re z > 1/2, by the
reflection relation. What is left (|z| > 1/2, Re z <= 1/2) goes through the
Bernoulli series in u = -log(1 - z), which converges for |u| < 2π.
"""

import cmath
from fractions import Fraction
import math

from s3vol.exceptions import DomainException


PI_SQUARED_OVER_6 = math.pi**2 / 6

_SERIES_RADIUS = 0.5
_SERIES_TERMS = 60
_BERNOULLI_TERMS = 40


def _bernoulli_numbers(n: int) -> list[Fraction]:
    """Bernoulli numbers B_0..B_n with the B_1 = -1/2 convention."""
    numbers = [Fraction(1)]
    for m in range(1, n + 1):
        numbers.append(
            -sum(math.comb(m + 1, k) * numbers[k] for k in range(m)) / (m + 1)
        )
    return numbers


_BERNOULLI_COEFFICIENTS: tuple[float, ...] = tuple(
    float(b / math.factorial(n + 1))
    for n, b in enumerate(_bernoulli_numbers(_BERNOULLI_TERMS))
)


def _finite(z: complex | float) -> complex:
    z = complex(z)
    if not cmath.isfinite(z):
        raise DomainException(f"Non-finite argument '{z}'.")
    return z


def plog(z: complex | float) -> complex:
    """Principal logarithm log|z| + i arg z with arg z in (-π, π].

    The negative real axis maps to arg = +π irrespective of the sign of a zero
    imaginary part.
    """
    z = _finite(z)
    if z == 0:
        raise DomainException("log(0) is undefined.")

    w = cmath.log(z)
    if z.imag == 0 and z.real < 0:
        return complex(w.real, math.pi)
    return w


def _dilog_series(z: complex) -> complex:
    total = 0j
    power = z
    for k in range(1, _SERIES_TERMS + 1):
        total += power / (k * k)
        power *= z
    return total


def _dilog_bernoulli(z: complex) -> complex:
    u = -plog(1 - z)
    total = 0j
    for coefficient in reversed(_BERNOULLI_COEFFICIENTS):
        total = total * u + coefficient
    return total * u


def _dilog_disk(z: complex) -> complex:
    """Li2 on the closed unit disk minus z = 1."""
    if abs(z) <= _SERIES_RADIUS:
        return _dilog_series(z)

    if z.real > 0.5:
        # reflection; |1 - z| < 1 and Re(1 - z) < 1/2 here
        w = 1 - z
        tail = _dilog_series(w) if abs(w) <= _SERIES_RADIUS else _dilog_bernoulli(w)
        return PI_SQUARED_OVER_6 - plog(z) * plog(w) - tail

    return _dilog_bernoulli(z)


def dilog(z: complex | float) -> complex:
    """Principal branch of the dilogarithm Li2.

    Analytic on C minus the cut {x real, x >= 1}; the cut endpoint z = 1
    returns the limit π²/6.
    """
    z = _finite(z)

    if z.imag == 0 and z.real >= 1:
        if z.real == 1:
            return complex(PI_SQUARED_OVER_6)
        raise DomainException(
            f"Li2 is not evaluated on its branch cut; received real argument {z.real}."
        )

    if abs(z) > 1:
        return -PI_SQUARED_OVER_6 - 0.5 * plog(-z) ** 2 - _dilog_disk(1 / z)

    return _dilog_disk(z)


def re_dilog_unit(theta: float) -> float:
    """Closed form of Re Li2(exp(iθ)).

    θ²/4 - πθ/2 + π²/6 on [0, 2π], continued 2π-periodically.
    """
    t = math.fmod(theta, 2 * math.pi)
    if t < 0:
        t += 2 * math.pi
    return t * t / 4 - math.pi * t / 2 + PI_SQUARED_OVER_6


def im_log1p_unit(theta: float) -> float:
    """Closed form of Im log(1 + exp(iθ)) for the principal logarithm."""
    t = math.fmod(theta + math.pi, 2 * math.pi)
    if t < 0:
        t += 2 * math.pi
    if t == 0:
        raise DomainException("log(1 + exp(iθ)) is undefined at θ ≡ π (mod 2π).")
    return (t - math.pi) / 2
