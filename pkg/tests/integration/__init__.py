"""Integration tests for end-to-end pipelines."""
