"""Command-line surface: volume, convert, validate, verify and batch."""

from s3vol.cli.batch import BatchRecord, BatchRunner, process_rows, read_rows
from s3vol.cli.parser import S3VolArgumentParser, build_parser, parser
from s3vol.cli.runners import (
    ConvertRunner,
    ValidateRunner,
    VerifyRunner,
    VolumeRunner,
    compute_volume,
)
