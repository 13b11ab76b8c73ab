"""Tests for HTML generation."""
