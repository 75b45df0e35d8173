"""Entry point for s3vol."""

import sys
from types import SimpleNamespace

from loguru import logger
from s3vol.cli import (
    BatchRunner,
    ConvertRunner,
    ValidateRunner,
    VerifyRunner,
    VolumeRunner,
    parser,
)
from s3vol.utils.loggers import configure_logging


runners = SimpleNamespace()
runners.volume = VolumeRunner
runners.convert = ConvertRunner
runners.validate = ValidateRunner
runners.verify = VerifyRunner
runners.batch = BatchRunner

_verbosity_levels = {0: None, 1: "INFO"}


def main(argv: list[str] | None = None) -> int:
    """Parse the command line, run the selected command and return its exit code."""
    args = parser.parse_args(argv)
    configure_logging(level=_verbosity_levels.get(args.verbose, "DEBUG"))

    runner = getattr(runners, args.command).from_args(args)
    logger.info(f"Invoking '{args.command}' runner.")
    return runner.persist()


if __name__ == "__main__":
    sys.exit(main())
