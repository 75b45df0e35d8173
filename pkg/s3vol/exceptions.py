"""Exceptions for s3vol."""

from typing import Any


class S3VolException(Exception):
    """Base exception for all s3vol domain errors."""


class DomainException(S3VolException):
    """Exception for arguments outside the domain of a complex helper.

    Raised by czmath for log(0), for dilogarithm arguments on the cut x > 1
    and for non-finite input.
    """


class AngleRangeException(S3VolException):
    """Exception for dihedral angles or edge lengths outside (0, π).

    This exception is raised from the DihedralAngles and EdgeLengths models
    if a validator fails.
    """


class InvalidTetrahedronException(S3VolException):
    """Exception for parameter vectors no spherical tetrahedron realizes.

    The validity report that led to the rejection is attached as `report`.
    """

    def __init__(self, message: str, report: Any = None):
        super().__init__(message)
        self.report = report


class DegenerateTetrahedronException(S3VolException):
    """Exception for numerically degenerate input.

    Raised when det G falls below the degeneracy tolerance, when a Cholesky
    pivot vanishes, when q2 vanishes or when the discriminant is not positive.
    """


class BranchException(S3VolException):
    """Exception for branch failures of the volume formulas.

    Raised when the numerator of z0 is not a negative real
    or when the mod 2π² representative cannot be repaired.
    """


class ConsistencyException(S3VolException):
    """Exception for violated internal identities.

    Raised e.g. for non-unit aⱼ, a non-real q1, q2 != conj(q0), |z0| >= 1
    or a failing cofactor identity.
    """


class BatchFileException(S3VolException):
    """Exception for batch input files that cannot be read.

    Raised for unreadable files and for a CSV header other than
    `id,mode,v1,v2,v3,v4,v5,v6,unit`.
    """
