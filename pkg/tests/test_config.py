import pytest

from idealis.cli.main import main
from idealis.config import DEFAULT_MAX_IDEALS, Settings, get_settings, set_settings
from idealis.errors import ConfigError


def test_defaults():
    settings = get_settings()
    assert settings.max_ideals == DEFAULT_MAX_IDEALS
    assert settings.threads == 1
    assert settings.log_level == "WARNING"


def test_environment(monkeypatch):
    monkeypatch.setenv("IDEALIS_MAX_IDEALS", "64")
    monkeypatch.setenv("IDEALIS_THREADS", "3")
    monkeypatch.setenv("IDEALIS_LOG_LEVEL", "debug")
    settings = Settings.from_env()
    assert (settings.max_ideals, settings.threads, settings.log_level) == (64, 3, "DEBUG")


@pytest.mark.parametrize(
    "name, value",
    [
        ("IDEALIS_MAX_IDEALS", "many"),
        ("IDEALIS_THREADS", "0"),
        ("IDEALIS_LOG_LEVEL", "chatty"),
    ],
)
def test_bad_environment(monkeypatch, name, value):
    monkeypatch.setenv(name, value)
    with pytest.raises(ConfigError, match=name):
        Settings.from_env()


def test_overrides_skip_none():
    settings = Settings().with_overrides(threads=4, max_ideals=None)
    assert settings.threads == 4
    assert settings.max_ideals == DEFAULT_MAX_IDEALS


def test_set_settings_resets():
    set_settings(Settings(max_ideals=10))
    assert get_settings().max_ideals == 10
    set_settings(None)
    assert get_settings().max_ideals == DEFAULT_MAX_IDEALS


def test_bad_environment_is_a_usage_error(monkeypatch, capsys):
    monkeypatch.setenv("IDEALIS_THREADS", "-2")
    assert main(["classify", "--ring", "Z/6", "--ideal", "(2)"]) == 2
    assert "IDEALIS_THREADS" in capsys.readouterr().err


def test_environment_cap_reaches_the_oracle(monkeypatch, capsys):
    monkeypatch.setenv("IDEALIS_MAX_IDEALS", "8")
    assert main(["classify", "--ring", "Z/360", "--ideal", "(0)", "--engine", "oracle"]) == 4
    assert "error: " in capsys.readouterr().err
