"""Runners for the s3vol commands."""

import argparse
from collections.abc import Sequence
import math
from typing import Literal

from loguru import logger
from s3vol.abcs import _ABCRunner
from s3vol.cli.output import (
    EXIT_INVALID,
    EXIT_OK,
    EXIT_RESIDUAL,
    console,
    err_console,
    print_json,
    report_error,
    suite_table,
    validity_json,
    validity_table,
    values_table,
    volume_result_json,
    volume_table,
)
from s3vol.dihedral_volume import VolumeResult, volume_from_angles
from s3vol.edge_volume import volume_from_lengths
from s3vol.exceptions import S3VolException
from s3vol.gram_geometry import (
    DihedralAngles,
    EdgeLengths,
    ValidityReport,
    angles_from_lengths,
    dual_angle_vector,
    is_spherical,
    lengths_from_angles,
)
from s3vol.utils.loggers import suite_report_log, volume_result_log
from s3vol.verifier import (
    SuiteReport,
    duality_suite,
    lemma_suite,
    montecarlo_suite,
    random_valid_tetrahedron,
    schlafli_suite,
)


type Mode = Literal["angles", "lengths"]


def to_radians(values: Sequence[float], degrees: bool) -> tuple[float, ...]:
    if degrees:
        return tuple(math.radians(value) for value in values)
    return tuple(float(value) for value in values)


def compute_volume(mode: Mode, radians: Sequence[float]) -> VolumeResult:
    """Dispatch to the angle or the length formula."""
    if mode == "angles":
        return volume_from_angles(DihedralAngles.from_sequence(radians))
    return volume_from_lengths(EdgeLengths.from_sequence(radians))


def _mode_and_values(args: argparse.Namespace) -> tuple[Mode | None, tuple[float, ...]]:
    if args.angles is not None:
        return "angles", to_radians(args.angles, args.degrees)
    if args.lengths is not None:
        return "lengths", to_radians(args.lengths, args.degrees)
    return None, ()


class VolumeRunner(_ABCRunner):
    """Runner for the volume command."""

    def __init__(self, mode: Mode, radians: Sequence[float], as_json: bool = False):
        self.mode = mode
        self.radians = tuple(radians)
        self.as_json = as_json

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> "VolumeRunner":
        mode, radians = _mode_and_values(args)
        return cls(mode, radians, as_json=args.json)

    def persist(self) -> int:
        try:
            result = self.run()
        except S3VolException as e:
            return report_error(e, self.as_json)

        volume_result_log(result)
        if self.as_json:
            print_json(volume_result_json(result))
        else:
            console.print(volume_table(result))
        return EXIT_OK

    def run(self) -> VolumeResult:
        return compute_volume(self.mode, self.radians)


class ConvertRunner(_ABCRunner):
    """Runner for the convert command: angles to lengths and back."""

    def __init__(self, mode: Mode, radians: Sequence[float], as_json: bool = False):
        self.mode = mode
        self.radians = tuple(radians)
        self.as_json = as_json

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> "ConvertRunner":
        mode, radians = _mode_and_values(args)
        return cls(mode, radians, as_json=args.json)

    def persist(self) -> int:
        try:
            converted = self.run()
        except S3VolException as e:
            return report_error(e, self.as_json)

        target = "lengths" if self.mode == "angles" else "angles"
        values = (
            converted.l if isinstance(converted, EdgeLengths) else converted.theta
        )

        if self.as_json:
            print_json(
                {
                    "mode": target,
                    "radians": list(values),
                    "degrees": [math.degrees(value) for value in values],
                }
            )
        else:
            console.print(values_table(f"Edge {target}", values))
        return EXIT_OK

    def run(self) -> EdgeLengths | DihedralAngles:
        if self.mode == "angles":
            return lengths_from_angles(DihedralAngles.from_sequence(self.radians))
        return angles_from_lengths(EdgeLengths.from_sequence(self.radians))


class ValidateRunner(_ABCRunner):
    """Runner for the validate command.

    Edge lengths are validated through the dual angle vector.
    """

    def __init__(self, mode: Mode, radians: Sequence[float], as_json: bool = False):
        self.mode = mode
        self.radians = tuple(radians)
        self.as_json = as_json

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> "ValidateRunner":
        mode, radians = _mode_and_values(args)
        return cls(mode, radians, as_json=args.json)

    def persist(self) -> int:
        report = self.run()

        if self.as_json:
            print_json(validity_json(report))
        else:
            console.print(validity_table(report))
        return EXIT_OK if report.verdict else EXIT_INVALID

    def run(self) -> ValidityReport:
        if self.mode == "angles":
            return is_spherical(self.radians)
        return is_spherical(dual_angle_vector(self.radians))


class VerifyRunner(_ABCRunner):
    """Runner for the verify command.

    The JSON report always goes to stdout; without --json a residual table
    is rendered on stderr as well.
    """

    def __init__(
        self,
        mode: Mode | None,
        radians: Sequence[float],
        suite: str = "lemma",
        n: int | None = None,
        seed: int = 0,
        workers: int | None = None,
        as_json: bool = False,
    ):
        self.mode = mode
        self.radians = tuple(radians)
        self.suite = suite
        self.n = n
        self.seed = seed
        self.workers = workers
        self.as_json = as_json

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> "VerifyRunner":
        mode, radians = _mode_and_values(args)
        return cls(
            mode,
            radians,
            suite=args.suite,
            n=args.n,
            seed=args.seed,
            workers=args.workers,
            as_json=args.json,
        )

    def angles(self) -> DihedralAngles:
        if self.mode == "angles":
            return DihedralAngles.from_sequence(self.radians)
        if self.mode == "lengths":
            return angles_from_lengths(EdgeLengths.from_sequence(self.radians))

        angles, _ = random_valid_tetrahedron(self.seed)
        logger.info(f"Drew random tetrahedron {angles.theta} from seed {self.seed}.")
        return angles

    def persist(self) -> int:
        try:
            report = self.run()
        except (S3VolException, ValueError) as e:
            return report_error(e, as_json=True)

        suite_report_log(report)
        print_json(report.to_json_dict())
        if not self.as_json:
            err_console.print(suite_table(report))
        return EXIT_OK if report.passed else EXIT_RESIDUAL

    def run(self) -> SuiteReport:
        angles = self.angles()

        match self.suite:
            case "lemma":
                return lemma_suite(angles)
            case "schlafli":
                return schlafli_suite(angles)
            case "duality":
                return duality_suite(angles)
            case "montecarlo":
                return montecarlo_suite(
                    angles, n=self.n, seed=self.seed, workers=self.workers
                )
            case _:
                raise ValueError(f"Unknown suite '{self.suite}'.")
