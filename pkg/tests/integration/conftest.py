"""Integration test fixtures."""

import pytest

from gridcomm.cli import main
from tests.utils.data_generators import make_network


@pytest.fixture
def run_cli(capsys):
    """Run the command line in-process; returns (exit code, stdout, stderr)."""

    def _run(*argv: str) -> tuple[int, str, str]:
        code = main([str(a) for a in argv])
        captured = capsys.readouterr()
        return code, captured.out, captured.err

    return _run


@pytest.fixture
def mixed_files(mixed_network, write_network_files):
    """Mixed fixture network as (nodes_path, edges_path)."""
    return write_network_files(mixed_network, "mixed")


@pytest.fixture
def path_files(path_network, write_network_files):
    """Path fixture network as (nodes_path, edges_path)."""
    return write_network_files(path_network, "path")


@pytest.fixture
def island_files(write_network_files):
    """Path a-b-c plus an isolated office node z."""
    network = make_network(
        {"a": "control_center", "b": "transmission", "c": "transmission", "z": "office"},
        [("e1", "a", "b"), ("e2", "b", "c")],
    )
    return write_network_files(network, "island")


@pytest.fixture
def profile_files(tmp_path, run_cli, mixed_files):
    """Profiles of the mixed network and of its simplification: (detailed, simplified)."""
    nodes, edges = mixed_files
    detailed = tmp_path / "detailed.json"
    simplified = tmp_path / "simplified.json"
    simple_dir = tmp_path / "simple"

    assert run_cli("stats", "--nodes", nodes, "--edges", edges, "--out", detailed)[0] == 0
    assert run_cli("simplify", "--nodes", nodes, "--edges", edges, "--out", simple_dir)[0] == 0
    assert (
        run_cli(
            "stats",
            "--nodes",
            simple_dir / "nodes.csv",
            "--edges",
            simple_dir / "edges.csv",
            "--out",
            simplified,
        )[0]
        == 0
    )
    return detailed, simplified
