"""Custom types for s3vol."""

type Unit6 = tuple[complex, ...]
"""Six unit complex numbers aⱼ = exp(iθⱼ), indexed by edge label minus one."""

type Real6 = tuple[float, float, float, float, float, float]
