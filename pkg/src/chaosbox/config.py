"""Configuration settings using pydantic-settings for environment variable loading."""

from enum import StrEnum
from functools import lru_cache

from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

from .logging import LOG_LEVELS


class LogFormat(StrEnum):
    CONSOLE = "console"
    JSON = "json"


class Settings(BaseSettings):
    """Runtime settings loaded from ``CHAOSBOX_*`` environment variables.

    Also reads a ``.env`` file in the working directory. Key material is never
    taken from here; it lives in key files (see ``chaosbox.keyfile``).
    """

    model_config = SettingsConfigDict(
        env_prefix="CHAOSBOX_",
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",
    )

    # Logging
    log_level: str = "WARNING"
    log_format: LogFormat = LogFormat.CONSOLE

    # Process count for S-box bank generation; 1 keeps it in-process
    bank_workers: int = Field(default=1, ge=1)

    @field_validator("log_level")
    @classmethod
    def _known_level(cls, value: str) -> str:
        level = value.strip().upper()
        if level not in LOG_LEVELS:
            raise ValueError(
                f"unknown log level {value!r}, expected one of {', '.join(LOG_LEVELS)}"
            )
        return level

    def with_overrides(self, **overrides: object) -> "Settings":
        """A validated copy with ``overrides`` applied; ``None`` values are skipped."""
        values = self.model_dump()
        values.update({k: v for k, v in overrides.items() if v is not None})
        return Settings.model_validate(values)


@lru_cache
def get_settings() -> Settings:
    """Get cached settings instance."""
    return Settings()
