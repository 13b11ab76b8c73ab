"""Test suite for gridcomm-stats."""
