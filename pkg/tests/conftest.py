"""Shared fixtures."""

import pytest

from waringbound.core.config import WaringSettings


@pytest.fixture
def waring_settings(monkeypatch):
    """Default settings, isolated from the caller's WARING_* environment."""
    for key in ("WARING_THREADS", "WARING_LOG_LEVEL", "WARING_LOG_FILE"):
        monkeypatch.delenv(key, raising=False)
    return WaringSettings(_env_file=None)
