"""Shared formatting functions for display values."""

from typing import Any

Number = int | float


def format_value(value: Any, decimals: int = 3) -> str:
    """Format a value for display."""
    if value is None:
        return "--"
    if isinstance(value, float):
        return f"{value:.{decimals}f}"
    return str(value)


def format_number(value: int | None) -> str:
    """Format an integer with thousands separators."""
    if value is None:
        return "--"
    return f"{value:,}"


def format_percent(value: Number | None, decimals: int = 1) -> str:
    """Format a fraction in [0, 1] as a percentage (0.2283 -> '22.8%')."""
    if value is None:
        return "--"
    return f"{value * 100:.{decimals}f}%"


def format_label(token: str) -> str:
    """Human-readable label for a type token ('control_center' -> 'Control Center')."""
    if token == "plc":
        return "PLC"
    return token.replace("_", " ").title()
