"""Pydantic models for angle data, length data and Gram matrices."""

import cmath
from collections.abc import Sequence
import math
from typing import Self

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator
from s3vol.exceptions import AngleRangeException, ConsistencyException
from s3vol.utils._types import Real6, Unit6


def _check_open_interval(name: str, values: tuple[float, ...]) -> tuple[float, ...]:
    for j, value in enumerate(values, start=1):
        if not (math.isfinite(value) and 0 < value < math.pi):
            raise AngleRangeException(
                f"{name}[{j}] must lie in the open interval (0, π).\n"
                f"Received '{value}'."
            )
    return values


class DihedralAngles(BaseModel):
    """Six dihedral angles θ1..θ6 in radians, indexed by edge label."""

    model_config = ConfigDict(frozen=True)

    theta: Real6

    @field_validator("theta")
    @classmethod
    def _theta_validator(cls, value):
        return _check_open_interval("theta", value)

    @classmethod
    def from_sequence(cls, values: Sequence[float], degrees: bool = False) -> Self:
        _values = tuple(math.radians(v) if degrees else float(v) for v in values)
        return cls(theta=_values)

    @property
    def a(self) -> Unit6:
        """aⱼ = exp(iθⱼ)."""
        return tuple(cmath.exp(1j * t) for t in self.theta)


class EdgeLengths(BaseModel):
    """Six geodesic edge lengths l1..l6 on the unit 3-sphere, indexed by edge label."""

    model_config = ConfigDict(frozen=True)

    l: Real6  # noqa: E741

    @field_validator("l")
    @classmethod
    def _l_validator(cls, value):
        return _check_open_interval("l", value)

    @classmethod
    def from_sequence(cls, values: Sequence[float], degrees: bool = False) -> Self:
        _values = tuple(math.radians(v) if degrees else float(v) for v in values)
        return cls(l=_values)

    @property
    def b(self) -> Unit6:
        """bⱼ = exp(ilⱼ)."""
        return tuple(cmath.exp(1j * t) for t in self.l)


class GramMatrix(BaseModel):
    """4x4 Gram matrix of the outward unit face normals."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    g: np.ndarray

    @field_validator("g", mode="before")
    @classmethod
    def _g_validator(cls, value):
        value = np.array(value, dtype=float)

        if value.shape != (4, 4):
            raise ConsistencyException(
                f"Gram matrix must be 4x4; received shape {value.shape}."
            )
        if not np.array_equal(value, value.T):
            raise ConsistencyException("Gram matrix must be symmetric.")
        if not np.all(np.diag(value) == 1.0):
            raise ConsistencyException("Gram matrix must have a unit diagonal.")

        off_diagonal = value[~np.eye(4, dtype=bool)]
        if np.any(np.abs(off_diagonal) >= 1):
            raise ConsistencyException(
                "Off-diagonal Gram entries must lie in (-1, 1)."
            )

        value.setflags(write=False)
        return value

    def cofactor(self, a: int, b: int) -> float:
        """c_ab = (-1)^(a+b) det of the minor without row a and column b (1-based)."""
        minor = np.delete(np.delete(self.g, a - 1, axis=0), b - 1, axis=1)
        return (-1) ** (a + b) * float(np.linalg.det(minor))

    @property
    def det(self) -> float:
        return float(np.linalg.det(self.g))

    @property
    def leading_minors(self) -> tuple[float, ...]:
        return tuple(float(np.linalg.det(self.g[:k, :k])) for k in range(1, 5))


class ValidityReport(BaseModel):
    """Result of the spherical validity test of an angle vector."""

    verdict: bool
    in_range: bool
    positive_definite: bool
    degenerate: bool
    det_gram: float | None = Field(default=None, serialization_alias="detG")
    leading_minors: tuple[float, ...] = ()
    vertex_conditions: dict[str, bool] = Field(default_factory=dict)
    messages: list[str] = Field(default_factory=list)
