"""CLI entry points for idealis; each command module exposes run()."""

__all__ = ["main", "classify", "survey", "verify", "witness"]
