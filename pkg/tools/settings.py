"""
Runtime configuration for Hamilton Tools.
"""

from functools import lru_cache
from pathlib import Path

from pydantic_settings import BaseSettings, SettingsConfigDict


class HamiltonSettings(BaseSettings):
    """Settings read from ``HAMILTON_TOOLS_*`` environment variables."""

    model_config = SettingsConfigDict(env_prefix="HAMILTON_TOOLS_", env_file=".env", extra="ignore")

    data_dir: Path = Path("data")
    log_level: str = "INFO"
    budget_factor: int = 4
    max_path_search: int = 20000


@lru_cache
def get_settings() -> HamiltonSettings:
    return HamiltonSettings()
