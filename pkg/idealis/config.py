"""Runtime settings read from the environment (and a local .env file)."""

import logging
import os
from dataclasses import dataclass, replace

from dotenv import load_dotenv

from .errors import ConfigError

logger = logging.getLogger(__name__)

DEFAULT_MAX_IDEALS = 512
DEFAULT_MAX_ELEMENTS = 4096


def _int_from_env(name: str, default: int, minimum: int = 1) -> int:
    raw = os.environ.get(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        value = int(raw)
    except ValueError as e:
        raise ConfigError(f"{name} must be an integer, got {raw!r}") from e
    if value < minimum:
        raise ConfigError(f"{name} must be >= {minimum}, got {value}")
    return value


@dataclass(frozen=True)
class Settings:
    max_ideals: int = DEFAULT_MAX_IDEALS
    max_elements: int = DEFAULT_MAX_ELEMENTS
    threads: int = 1
    log_level: str = "WARNING"

    @classmethod
    def from_env(cls) -> "Settings":
        load_dotenv()
        level = os.environ.get("IDEALIS_LOG_LEVEL", "WARNING").upper()
        if level not in logging.getLevelNamesMapping():
            raise ConfigError(f"IDEALIS_LOG_LEVEL is not a logging level: {level!r}")
        return cls(
            max_ideals=_int_from_env("IDEALIS_MAX_IDEALS", DEFAULT_MAX_IDEALS),
            max_elements=_int_from_env("IDEALIS_MAX_ELEMENTS", DEFAULT_MAX_ELEMENTS),
            threads=_int_from_env("IDEALIS_THREADS", 1),
            log_level=level,
        )

    def with_overrides(self, **changes) -> "Settings":
        changes = {k: v for k, v in changes.items() if v is not None}
        return replace(self, **changes)


# Global settings instance
_settings: Settings | None = None


def get_settings() -> Settings:
    """Get the process-wide settings, reading the environment on first use."""
    global _settings
    if _settings is None:
        _settings = Settings.from_env()
        logger.debug(f"Settings loaded: {_settings}")
    return _settings


def set_settings(settings: Settings | None) -> None:
    """Install settings (None resets to re-read the environment)."""
    global _settings
    _settings = settings
