"""Fixtures for report output tests."""

import pytest

from gridcomm.metrics import statistics_profile
from gridcomm.simplify import simplify


@pytest.fixture
def path_profile(path_network):
    """Profile of the a-b-c path with control a (every value exact in binary)."""
    return statistics_profile(path_network, ["a"])


@pytest.fixture
def detailed_profile(mixed_network):
    """Profile of the mixed fixture, control centers auto-detected."""
    return statistics_profile(mixed_network)


@pytest.fixture
def simplified_profile(mixed_network):
    """Profile of the simplified mixed fixture."""
    return statistics_profile(simplify(mixed_network))
