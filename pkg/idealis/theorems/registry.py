"""Check Registry - lookup of theorem checks by id."""

import logging

from ..errors import UnknownCheckError
from .base import TheoremCheck
from .checks import DEFAULT_CHECKS

logger = logging.getLogger(__name__)


class CheckRegistry:
    def __init__(self):
        self._checks: dict[str, TheoremCheck] = {}

    def register(self, check: TheoremCheck) -> TheoremCheck:
        if check.check_id in self._checks:
            logger.warning(f"Replacing registered check: {check.check_id}")
        self._checks[check.check_id] = check
        logger.debug(f"Registered check: {check.check_id}")
        return check

    def register_many(self, checks: list[TheoremCheck]) -> list[TheoremCheck]:
        return [self.register(c) for c in checks]

    def get(self, check_id: str) -> TheoremCheck:
        check = self._checks.get(check_id)
        if check is None:
            raise UnknownCheckError(
                f"unknown check {check_id!r}; available: {', '.join(self.list_checks())}"
            )
        return check

    def select(self, check_ids: list[str] | None) -> list[TheoremCheck]:
        """All checks in registration order, or the named ones in the order given."""
        if not check_ids:
            return list(self._checks.values())
        return [self.get(c) for c in check_ids]

    def list_checks(self) -> list[str]:
        return list(self._checks.keys())

    def get_check_descriptions(self) -> dict[str, str]:
        return {check_id: check.description for check_id, check in self._checks.items()}

    def get_checks_summary(self) -> str:
        if not self._checks:
            return "No theorem checks registered."

        lines = ["Available checks:"]
        for check_id, check in self._checks.items():
            lines.append(f"  - {check_id}: {check.description}")
        return "\n".join(lines)

    def clear(self):
        self._checks.clear()


# Global registry instance
_registry: CheckRegistry | None = None


def get_registry() -> CheckRegistry:
    """Get the global check registry, populated with the default checks."""
    global _registry
    if _registry is None:
        _registry = CheckRegistry()
        _registry.register_many([cls() for cls in DEFAULT_CHECKS])
    return _registry


def shutdown_registry():
    """Drop the global registry."""
    global _registry
    if _registry:
        _registry.clear()
        _registry = None
