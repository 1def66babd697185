"""Runtime configuration and settings."""

import logging
import os
from functools import lru_cache

from dotenv import load_dotenv

# Load environment variables from .env file
load_dotenv()

logger = logging.getLogger(__name__)


def _positive_int(name: str, default: int) -> int:
    """Read a positive integer from the environment, falling back to ``default``."""
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        value = int(raw)
    except ValueError:
        logger.warning("Ignoring %s=%r: not an integer, using %d", name, raw, default)
        return default
    if value < 1:
        logger.warning("Ignoring %s=%r: must be positive, using %d", name, raw, default)
        return default
    return value


def _int(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        return int(raw)
    except ValueError:
        logger.warning("Ignoring %s=%r: not an integer, using %d", name, raw, default)
        return default


class Settings:
    """Settings loaded from environment variables."""

    def __init__(self):
        self.threads: int = _positive_int("DIRAC_PAIRINGS_THREADS", 1)
        self.default_seed: int = _int("DIRAC_PAIRINGS_SEED", 0)
        self.lab_max: int = _positive_int("DIRAC_PAIRINGS_LAB_MAX", 6)
        self.log_level: str = os.getenv("LOG_LEVEL", "warning")

    @property
    def parallel(self) -> bool:
        return self.threads > 1


@lru_cache
def get_settings() -> Settings:
    """Get cached settings instance."""
    return Settings()
