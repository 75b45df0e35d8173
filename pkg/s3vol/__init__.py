from pathlib import Path

from pydantic_settings import BaseSettings, SettingsConfigDict
from s3vol.utils.paths import env_path


class Settings(BaseSettings):
    """Main settings class.

    Every field can be overridden with an S3VOL_-prefixed environment variable
    or an entry in the repository .env file.
    """

    model_config = SettingsConfigDict(
        env_file=env_path, env_prefix="S3VOL_", extra="ignore"
    )

    LOG_LEVEL: str = "WARNING"
    LOG_FILE: Path | None = None

    UNIT_TOLERANCE: float = 1e-12
    CONSISTENCY_TOLERANCE: float = 1e-10
    DEGENERACY_TOLERANCE: float = 1e-12
    DEGENERACY_FLAG_THRESHOLD: float = 1e-3
    BRANCH_REPAIR_TOLERANCE: float = 1e-6

    FD_STEP: float = 1e-6
    GENERATOR_MIN_DET: float = 1e-3

    MC_SAMPLES: int = 4_000_000
    MC_CHUNK_SIZE: int = 262_144
    MC_WORKERS: int = 1
    MC_CALIBRATION_SAMPLES: int = 200_000


settings = Settings()
