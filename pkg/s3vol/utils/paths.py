"""Traversable constants for s3vol."""

from importlib.resources import files
from importlib.resources.abc import Traversable


s3vol_base_path: Traversable = files("s3vol")

env_path = s3vol_base_path / "../.env"
