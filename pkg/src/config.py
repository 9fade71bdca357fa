"""Application configuration using pydantic-settings."""
import logging
from functools import lru_cache
from pathlib import Path

from pydantic import Field, field_validator, model_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

PROJECT_ROOT = Path(__file__).resolve().parent.parent


class Settings(BaseSettings):
    """Application settings with environment variable support."""

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore",
    )

    # Application
    ENVIRONMENT: str = Field(default="development", description="Environment name")
    DEBUG: bool = Field(default=False, description="Debug mode")
    LOG_LEVEL: str = Field(default="WARNING", description="Logging level")

    # Finite field defaults
    NORMAL_BASES_FILE: Path = Field(
        default=PROJECT_ROOT / "config" / "normal_bases.yaml",
        description="Per-degree default modulus and normal basis generator exponent",
    )

    # Verification budgets
    MAX_N_COMBINATORIAL: int = Field(
        default=14, ge=1, description="Largest n for the exhaustive combinatorial suites"
    )
    MAX_N_REUTENAUER: int = Field(
        default=12, ge=1, description="Largest n for the necklace/polynomial correspondence"
    )
    MAX_N_GLEASON: int = Field(
        default=10, ge=1, description="Largest n for root isolation over the integers"
    )
    MAX_N_COUNTING: int = Field(default=16, ge=1, description="Largest n for counting checks")
    MAX_N_CUP: int = Field(
        default=16, ge=1, description="Largest n for which CUP(n) is enumerated"
    )
    TABLE_MAX_N: int = Field(default=10, ge=1, description="Largest n accepted by `table`")

    # Root isolation and critical orbits
    ROOT_PRECISION: float = Field(
        default=1e-12, gt=0.0, description="Absolute width of refined root brackets"
    )
    SIGN_TOLERANCE: float = Field(
        default=1e-6,
        gt=0.0,
        description="Orbit values closer to 0 than this trigger re-refinement",
    )
    ORBIT_TOLERANCE: float = Field(
        default=1e-4, gt=0.0, description="Warn when |f_c^n(0)| exceeds this value"
    )
    ORBIT_DPS: int = Field(
        default=50, ge=15, description="Decimal digits used for critical orbits"
    )
    MAX_REFINEMENTS: int = Field(
        default=8, ge=0, description="Re-refinement rounds before a sign decision fails"
    )

    # Counting
    SUBSET_ENUMERATION_LIMIT: int = Field(
        default=20,
        ge=1,
        description="Largest n whose subset sums are enumerated directly",
    )

    # Execution
    VERIFY_JOBS: int = Field(default=1, ge=1, description="Worker processes for `verify`")
    GLEASON_CACHE_SIZE: int = Field(
        default=64, ge=1, description="Entries kept per polynomial cache"
    )

    # Monitoring
    ENABLE_METRICS: bool = Field(default=True, description="Record Prometheus metrics")

    @field_validator("LOG_LEVEL")
    @classmethod
    def validate_log_level(cls, v: str) -> str:
        """Ensure the log level names a standard logging level."""
        level = v.upper()
        if not isinstance(logging.getLevelName(level), int):
            raise ValueError(f"Unknown log level: {v}")
        return level

    @model_validator(mode="after")
    def validate_tolerances(self) -> "Settings":
        """Sign decisions must be coarser than the root brackets."""
        if self.SIGN_TOLERANCE <= self.ROOT_PRECISION:
            raise ValueError("SIGN_TOLERANCE must exceed ROOT_PRECISION")
        return self

    @property
    def is_development(self) -> bool:
        """Check if running in development environment."""
        return self.ENVIRONMENT.lower() == "development"


@lru_cache
def get_settings() -> Settings:
    """Get cached settings instance."""
    return Settings()
