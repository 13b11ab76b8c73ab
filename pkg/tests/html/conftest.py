"""Fixtures for HTML tests."""

import pytest

from gridcomm.metrics import statistics_profile
from gridcomm.simplify import simplify


@pytest.fixture
def templates_dir(src_root):
    """Path to templates directory."""
    return src_root / "templates"


@pytest.fixture
def labelled_profiles(mixed_network):
    """Detailed and simplified profiles of the mixed fixture."""
    return [
        ("detailed", statistics_profile(mixed_network)),
        ("simplified", statistics_profile(simplify(mixed_network))),
    ]
