"""Root fixtures for all tests."""

import os
from pathlib import Path

import pytest

from gridcomm.ingest import export_network
from gridcomm.network import Network
from tests.utils.data_generators import make_network


@pytest.fixture(autouse=True)
def clean_env(monkeypatch):
    """Clear GRIDCOMM_* env vars and reset config singleton before each test."""
    for key in list(os.environ.keys()):
        if key.startswith("GRIDCOMM_"):
            monkeypatch.delenv(key, raising=False)

    import gridcomm.env

    gridcomm.env._config = None

    yield

    gridcomm.env._config = None


@pytest.fixture
def configure(monkeypatch):
    """Set GRIDCOMM_* variables and drop the cached Config.

    Fixtures that build profiles may already have created the Config, so
    setting the environment alone would not reach it.
    """
    import gridcomm.env

    def _configure(**values: str) -> None:
        for key, value in values.items():
            monkeypatch.setenv(key, value)
        gridcomm.env._config = None

    return _configure


@pytest.fixture
def path_network():
    """a - b - c, a is a control center."""
    return make_network(
        {"a": "control_center", "b": "transmission", "c": "transmission"},
        [("e1", "a", "b"), ("e2", "b", "c")],
    )


@pytest.fixture
def star_network():
    """Microwave hub m with three transmission spokes a, b, c."""
    return make_network(
        {"m": "microwave", "a": "transmission", "b": "transmission", "c": "transmission"},
        [
            ("e1", "m", "a", "microwave"),
            ("e2", "m", "b", "microwave"),
            ("e3", "m", "c", "microwave"),
        ],
    )


@pytest.fixture
def mixed_network():
    """Small typed network with parallel links, two control centers and a microwave backbone.

    cc1 - m1 (microwave) x2 parallel, m1 - m2 (microwave), m2 - cc2 (fiber),
    m1 - t1 (plc), m2 - t2 (leased), t1 - g1 (fiber), t2 - o1 (radio)
    """
    return make_network(
        {
            "cc1": "control_center",
            "cc2": "control_center",
            "m1": "microwave",
            "m2": "microwave",
            "t1": "transmission",
            "t2": "transmission",
            "g1": "generating",
            "o1": "office",
        },
        [
            ("e01", "cc1", "m1", "microwave"),
            ("e02", "cc1", "m1", "microwave"),
            ("e03", "m1", "m2", "microwave"),
            ("e04", "m2", "cc2", "fiber"),
            ("e05", "m1", "t1", "plc"),
            ("e06", "m2", "t2", "leased"),
            ("e07", "t1", "g1", "fiber"),
            ("e08", "t2", "o1", "radio"),
        ],
    )


@pytest.fixture
def write_network_files(tmp_path):
    """Write a network as canonical CSV files; returns (nodes_path, edges_path)."""

    def _write(network: Network, name: str = "net") -> tuple[Path, Path]:
        nodes_text, edges_text = export_network(network)
        nodes_path = tmp_path / f"{name}_nodes.csv"
        edges_path = tmp_path / f"{name}_edges.csv"
        nodes_path.write_text(nodes_text, encoding="utf-8")
        edges_path.write_text(edges_text, encoding="utf-8")
        return nodes_path, edges_path

    return _write


@pytest.fixture
def project_root():
    """Path to the project root directory."""
    return Path(__file__).parent.parent


@pytest.fixture
def src_root(project_root):
    """Path to the src/gridcomm directory."""
    return project_root / "src" / "gridcomm"
