"""Fixtures for configuration tests."""

import os

import pytest


@pytest.fixture
def isolate_config_loading(monkeypatch):
    """Clear every GRIDCOMM_* variable and reset the config singleton.

    Config file loading writes to os.environ directly, so monkeypatch
    registers each key up front to have it restored afterwards.
    """
    for key in list(os.environ.keys()):
        if key.startswith("GRIDCOMM_"):
            monkeypatch.delenv(key, raising=False)
    for key in ("GRIDCOMM_DEBUG", "GRIDCOMM_TOL_RATIO", "GRIDCOMM_CONTROL_TYPE", "GRIDCOMM_REPORT_TITLE"):
        monkeypatch.setenv(key, "")
        monkeypatch.delenv(key)

    import gridcomm.env
    gridcomm.env._config = None

    yield

    gridcomm.env._config = None
