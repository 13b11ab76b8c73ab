"""Statistics toolkit for utility communication network models."""

__version__ = "0.1.0"  # x-release-please-version
