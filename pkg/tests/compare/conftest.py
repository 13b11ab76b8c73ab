"""Fixtures for profile comparison tests."""

from dataclasses import replace

import pytest

from gridcomm.metrics import statistics_profile


@pytest.fixture
def reference_profile(mixed_network):
    return statistics_profile(mixed_network)


@pytest.fixture
def shifted_profile(reference_profile):
    """Reference profile with a different PLC-Fiber ratio."""

    def _shift(ratio: float):
        return replace(reference_profile, plc_fiber_ratio=ratio)

    return _shift
