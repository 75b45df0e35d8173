"""Pydantic models for the dihedral-angle formula stack."""

from typing import Literal

from pydantic import BaseModel, ConfigDict, Field, field_serializer


class QCoefficients(BaseModel):
    """Coefficients of the quadratic whose root is the auxiliary parameter z0."""

    model_config = ConfigDict(frozen=True)

    q0: complex
    q1: float
    q2: complex
    discriminant: float


class VolumeResult(BaseModel):
    """Volume of a spherical tetrahedron plus the diagnostics of its computation.

    `det_g` is the determinant of the Gram matrix whose angles enter L:
    the tetrahedron's own for the angle formula, the dual's for the length formula.
    """

    model_config = ConfigDict(frozen=True)

    volume: float
    z0: complex
    arg_neg_q2: float
    det_g: float = Field(serialization_alias="detG")
    raw_value: float
    branch_warnings: list[str] = Field(
        default_factory=list, serialization_alias="warnings"
    )
    formula: Literal["angles", "lengths"] = "angles"

    @field_serializer("z0")
    def _z0_serializer(self, value: complex) -> dict[str, float]:
        return {"re": value.real, "im": value.imag}
