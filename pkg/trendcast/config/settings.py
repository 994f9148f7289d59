from pathlib import Path

from pydantic import Field, field_validator
from pydantic_settings import SettingsConfigDict

from trendcast.constants.defaults import LOG_LEVELS, MAX_GAP_SAMPLES
from trendcast.utils.base_settings_utils import TomlBaseSettings


class TrendcastSettings(TomlBaseSettings):
    """Process-wide settings read from ``TRENDCAST_*`` variables, then ``trendcast.toml``.

    Attributes:
        threads (int | None): Upper bound on concurrent workers; ``None`` lets the executor decide.
        log_level (str): Minimum loguru level.
        max_gap (int): Longest run of missing samples filled on CSV ingestion.

    """

    model_config = SettingsConfigDict(
        env_prefix="TRENDCAST_",
        toml_file=TomlBaseSettings.get_toml_files(Path.cwd()),
        extra="ignore",
    )

    threads: int | None = Field(default=None, ge=1)
    log_level: str = "INFO"
    max_gap: int = Field(default=MAX_GAP_SAMPLES, ge=0)

    @field_validator("log_level")
    @classmethod
    def _known_level(cls, value: str) -> str:
        level = value.strip().upper()
        if level not in LOG_LEVELS:
            raise ValueError(f"log_level must be one of {', '.join(LOG_LEVELS)}")
        return level


def get_settings(**overrides: object) -> TrendcastSettings:
    return TrendcastSettings(**overrides)
