"""Pydantic models for oracles and verification reports."""

from typing import Literal

import numpy as np
from pydantic import BaseModel, ConfigDict, Field


class FaceNormals(BaseModel):
    """Four unit face normals in R⁴ (rows of `vectors`) realizing a Gram matrix."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    vectors: np.ndarray

    def gram(self) -> np.ndarray:
        return self.vectors @ self.vectors.T

    def reconstruction_residual(self, g: np.ndarray) -> float:
        return float(np.max(np.abs(self.gram() - g)))


class McEstimate(BaseModel):
    """Monte-Carlo volume estimate: 2π² times the hit fraction on S³."""

    model_config = ConfigDict(frozen=True)

    estimate: float
    stderr: float
    hits: int
    n: int
    seed: int


class Residual(BaseModel):
    """One checked identity.

    kind "upper": passes when value <= bound; kind "margin": passes when value > bound.
    A value of None means the identity could not be evaluated.
    """

    name: str
    value: float | None
    bound: float
    kind: Literal["upper", "margin"] = "upper"

    @property
    def passed(self) -> bool:
        if self.value is None:
            return False
        if self.kind == "margin":
            return self.value > self.bound
        return self.value <= self.bound


class SuiteReport(BaseModel):
    """Residuals of one verification suite for one tetrahedron."""

    suite: str
    angles: tuple[float, ...]
    residuals: list[Residual] = Field(default_factory=list)
    flags: list[str] = Field(default_factory=list)
    details: dict[str, float | int] = Field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(residual.passed for residual in self.residuals)

    def to_json_dict(self) -> dict:
        data = self.model_dump(mode="json")
        data["passed"] = self.passed
        for entry, residual in zip(data["residuals"], self.residuals):
            entry["passed"] = residual.passed
        return data
