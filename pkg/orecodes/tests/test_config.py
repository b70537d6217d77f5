"""Tests for settings loading and validation."""

import pytest
from pydantic import ValidationError

from config import Settings, get_settings


def test_defaults(monkeypatch):
    for name in ("BUDGET", "MAX_WORKERS", "ENUM_CHUNK", "SEED", "TRIALS", "LOG_LEVEL"):
        monkeypatch.delenv(f"ORECODES_{name}", raising=False)
    settings = Settings(_env_file=None)
    assert settings.budget == 10**6
    assert settings.max_workers == 4
    assert settings.trials == 1.0
    assert settings.log_level == "WARNING"


def test_environment_prefix(monkeypatch):
    monkeypatch.setenv("ORECODES_BUDGET", "500")
    monkeypatch.setenv("ORECODES_LOG_LEVEL", "debug")
    settings = Settings(_env_file=None)
    assert settings.budget == 500
    assert settings.log_level == "DEBUG"


@pytest.mark.parametrize("field, value", [
    ("trials", 0),
    ("trials", 1.5),
    ("budget", 0),
    ("max_workers", -1),
    ("log_level", "chatty"),
])
def test_rejects_bad_values(field, value):
    with pytest.raises(ValidationError):
        Settings(_env_file=None, **{field: value})


def test_scaled_counts():
    settings = Settings(_env_file=None, trials=0.1)
    assert settings.scaled(500) == 50
    assert settings.scaled(3) == 1


def test_get_settings_is_cached():
    get_settings.cache_clear()
    assert get_settings() is get_settings()
    get_settings.cache_clear()
