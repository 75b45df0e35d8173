"""ABCs for s3vol."""

from abc import ABC, abstractmethod
from typing import Any


class _ABCRunner(ABC):
    """ABC for s3vol command runners.

    run() computes the command's result and raises s3vol exceptions;
    persist() runs the command, writes its output and returns the exit code.
    """

    @abstractmethod
    def persist(self) -> int:
        raise NotImplementedError

    @abstractmethod
    def run(self) -> Any:
        raise NotImplementedError
