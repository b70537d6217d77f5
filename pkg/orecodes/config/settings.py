"""Settings and configuration management.

This module handles all environment variables and configuration settings
using pydantic-settings for type safety and validation.
"""

import logging
from functools import lru_cache

from pydantic import Field, field_validator
from pydantic_settings import BaseSettings


# Configure logging
logger = logging.getLogger(__name__)

_LOG_LEVELS = ("CRITICAL", "ERROR", "WARNING", "INFO", "DEBUG")


class Settings(BaseSettings):
    """Application settings loaded from environment variables."""

    # Code analysis
    budget: int = Field(
        default=10**6,
        description="Maximum number of codewords enumerated by min_distance"
    )
    max_workers: int = Field(
        default=4,
        description="Maximum concurrent enumeration workers"
    )
    enum_chunk: int = Field(
        default=256,
        description="Coefficient vectors scanned per enumeration task"
    )

    # Verification
    seed: int = Field(default=20240611, description="Default randomness seed")
    trials: float = Field(
        default=1.0,
        description="Fraction of the full acceptance sample counts used by selftest"
    )

    # Logging
    log_level: str = Field(default="WARNING", description="Root log level")

    @field_validator("log_level", mode="after")
    @classmethod
    def normalize_level(cls, v: str) -> str:
        """Ensure the level is a known logging level name."""
        level = v.upper()
        if level not in _LOG_LEVELS:
            raise ValueError(f"unknown log level: {v}")
        return level

    @field_validator("trials", mode="after")
    @classmethod
    def check_trials(cls, v: float) -> float:
        """Trials scale must lie in (0, 1]."""
        if not 0 < v <= 1:
            raise ValueError(f"trials must lie in (0, 1], got {v}")
        return v

    @field_validator("budget", "max_workers", "enum_chunk", mode="after")
    @classmethod
    def check_positive(cls, v: int) -> int:
        """Counts must be positive."""
        if v < 1:
            raise ValueError(f"expected a positive integer, got {v}")
        return v

    model_config = {
        "env_prefix": "ORECODES_",
        "env_file": ".env",
        "env_file_encoding": "utf-8",
        "case_sensitive": False,
        "extra": "ignore",
    }

    def scaled(self, count: int) -> int:
        """Scale a full-size sample count by the trials setting."""
        return max(1, round(count * self.trials))


@lru_cache()
def get_settings() -> Settings:
    """Get cached settings instance (singleton pattern)."""
    settings = Settings()
    logger.debug(f"[Settings] budget={settings.budget} workers={settings.max_workers}")
    return settings
