"""Errors raised by idealis, each carrying the CLI exit code it maps to."""


class IdealisError(Exception):
    exit_code = 1


class ConfigError(IdealisError, ValueError):
    exit_code = 2


class ParseError(IdealisError, ValueError):
    exit_code = 2

    def __init__(self, message: str, position: int | None = None, text: str | None = None):
        self.position = position
        self.text = text
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class RingMismatchError(IdealisError, ValueError):
    exit_code = 2


class UnsupportedRingError(IdealisError, ValueError):
    exit_code = 2


class InfiniteRingError(IdealisError, ValueError):
    exit_code = 2


class NonProperIdealError(IdealisError, ValueError):
    exit_code = 3


class ResourceCapError(IdealisError, RuntimeError):
    exit_code = 4


class ArithmeticOverflowError(IdealisError, OverflowError):
    exit_code = 4


class EmptyFamilyError(IdealisError, ValueError):
    exit_code = 2


class UnknownCheckError(IdealisError, KeyError):
    exit_code = 2

    def __str__(self) -> str:
        return str(self.args[0]) if self.args else "unknown check"


class WitnessError(IdealisError, ValueError):
    exit_code = 2


class EngineDisagreementError(IdealisError, RuntimeError):
    exit_code = 5


class FactorizationError(IdealisError, ArithmeticError):
    exit_code = 5
