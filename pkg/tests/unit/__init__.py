"""Unit tests for pure functions."""
