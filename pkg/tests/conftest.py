import pytest

from idealis.config import set_settings
from idealis.core import parse_ideal, parse_ring
from idealis.oracle import lattice_for, shutdown_pool_manager
from idealis.theorems import shutdown_registry


@pytest.fixture(autouse=True)
def fresh_settings(monkeypatch):
    """Every test starts from default settings, unaffected by the caller's environment."""
    for name in ("IDEALIS_MAX_IDEALS", "IDEALIS_MAX_ELEMENTS", "IDEALIS_THREADS", "IDEALIS_LOG_LEVEL"):
        monkeypatch.delenv(name, raising=False)
    set_settings(None)
    yield
    set_settings(None)
    shutdown_pool_manager()
    shutdown_registry()


@pytest.fixture(scope="session", autouse=True)
def clear_lattice_cache():
    yield
    lattice_for.cache_clear()


@pytest.fixture
def ideal():
    """Parse ``(ring_text, ideal_text)`` into ``(ring, ideal)``."""

    def make(ring_text: str, ideal_text: str):
        ring = parse_ring(ring_text)
        return ring, parse_ideal(ring, ideal_text)

    return make
