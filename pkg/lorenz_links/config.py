# CHECKPOINT_1_PROJECT_SETUP
"""
Configuration Management
========================
Centralized configuration for the Lorenz link toolkit.
Values come from environment variables (prefix ``LORENZ_``) or a ``.env``
file, with fallback defaults.
"""

from functools import lru_cache
from typing import Any, Dict, Literal

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Application settings loaded from environment variables"""

    model_config = SettingsConfigDict(
        extra="ignore",
        env_file=".env",
        env_file_encoding="utf-8",
        env_prefix="LORENZ_",
        case_sensitive=True,
    )

    # ============================================
    # Application Settings
    # ============================================
    APP_NAME: str = "Lorenz Link Verifier"
    APP_VERSION: str = "0.1.0"
    DEBUG: bool = False
    ENVIRONMENT: str = "development"

    # ============================================
    # API Settings
    # ============================================
    API_HOST: str = "0.0.0.0"
    API_PORT: int = 8000
    API_PREFIX: str = "/api/v1"
    API_BATTERY_MAX_SUM: int = 10  # heavier batteries belong on the CLI
    API_MAX_STRANDS: int = 48  # Lorenz braid strands, or strands of a reported braid
    API_MAX_LETTERS: int = 400  # letters of a reported braid

    # ============================================
    # Invariant Engine
    # ============================================
    MAX_BRACKET_CROSSINGS: int = Field(default=22, description="State-sum crossing cap")
    BRACKET_METHOD: Literal["frontier", "states"] = "frontier"

    # ============================================
    # Battery
    # ============================================
    BATTERY_MAX_SUM: int = 10
    BATTERY_JOBS: int = 1
    PROPERTY_SEED: int = 20240611

    # ============================================
    # Logging
    # ============================================
    # WARNING keeps CLI output clean; INFO shows pipeline stages
    LOG_LEVEL: str = "WARNING"
    LOG_TO_FILE: bool = False
    LOG_FILE_PATH: str = "logs/lorenz_links.log"


@lru_cache()
def get_settings() -> Settings:
    """
    Get cached settings instance.
    Use this function to access settings throughout the package.
    """
    return Settings()


# Global settings instance
settings = get_settings()


# ============================================
# Validation Functions
# ============================================

_LOG_LEVELS = {"DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"}


def validate_config(config: Settings | None = None) -> bool:
    """
    Validate the configuration.
    Raises ValueError listing every problem found.
    """
    config = config or settings
    errors = []

    if config.LOG_LEVEL.upper() not in _LOG_LEVELS:
        errors.append(f"LOG_LEVEL must be one of {sorted(_LOG_LEVELS)}, got {config.LOG_LEVEL!r}")
    if config.MAX_BRACKET_CROSSINGS < 0:
        errors.append("MAX_BRACKET_CROSSINGS must be >= 0")
    if config.BATTERY_MAX_SUM < 1:
        errors.append("BATTERY_MAX_SUM must be >= 1")
    if config.API_BATTERY_MAX_SUM < 1:
        errors.append("API_BATTERY_MAX_SUM must be >= 1")
    if config.API_MAX_STRANDS < 2:
        errors.append("API_MAX_STRANDS must be >= 2")
    if config.API_MAX_LETTERS < 1:
        errors.append("API_MAX_LETTERS must be >= 1")
    if config.BATTERY_JOBS < 1:
        errors.append("BATTERY_JOBS must be >= 1")

    if errors:
        raise ValueError("Configuration errors:\n" + "\n".join(f"  - {e}" for e in errors))

    return True


def config_summary(config: Settings | None = None) -> Dict[str, Any]:
    """Summary of the current configuration (for startup logs)"""
    config = config or settings
    return {
        "environment": config.ENVIRONMENT,
        "debug": config.DEBUG,
        "api": f"{config.API_HOST}:{config.API_PORT}{config.API_PREFIX}",
        "bracket": f"{config.BRACKET_METHOD} (cap {config.MAX_BRACKET_CROSSINGS})",
        "battery": f"max_sum={config.BATTERY_MAX_SUM} jobs={config.BATTERY_JOBS}",
        "log_level": config.LOG_LEVEL,
    }
