"""HTML rendering helpers using Jinja2 templates."""

from __future__ import annotations

from collections.abc import Sequence
from typing import Any

from jinja2 import Environment, PackageLoader, select_autoescape

from .compare import ComparisonReport
from .env import get_config
from .formatters import format_label, format_number, format_percent, format_value
from .metrics import DegreeTypeMatrix
from .network import EdgeType, NodeType
from .reports import LabelledProfile

# Singleton Jinja2 environment
_jinja_env: Environment | None = None


def get_jinja_env() -> Environment:
    """Get or create the singleton Jinja2 environment.

    Uses PackageLoader to load templates from src/gridcomm/templates/
    with autoescape enabled.
    """
    global _jinja_env
    if _jinja_env is not None:
        return _jinja_env

    env = Environment(
        loader=PackageLoader("gridcomm", "templates"),
        autoescape=select_autoescape(["html", "xml"]),
        trim_blocks=True,
        lstrip_blocks=True,
    )

    env.filters["format_value"] = format_value
    env.filters["format_number"] = format_number
    env.filters["format_percent"] = format_percent
    env.filters["format_label"] = format_label

    _jinja_env = env
    return env


def build_matrix_table(label: str, matrix: DegreeTypeMatrix) -> dict[str, Any]:
    """Rows of one degree-type distribution table."""
    edge_types = matrix.edge_types
    rows = [
        {
            "node_type": node_type.value,
            "cells": [matrix.get(node_type, t) for t in edge_types],
        }
        for node_type in NodeType
        if node_type in matrix.cells
    ]
    return {
        "label": label,
        "edge_types": [t.value for t in edge_types],
        "rows": rows,
        "totals": [matrix.column_total(t) for t in edge_types],
    }


def build_page_context(
    profiles: Sequence[LabelledProfile],
    comparison: ComparisonReport | None = None,
    title: str | None = None,
) -> dict[str, Any]:
    """Template context for the profile page."""
    adl_types = [t for t in NodeType if any(t in p.adl for _, p in profiles)]
    aebc_types = [t for t in EdgeType if any(t in p.aebc for _, p in profiles)]

    return {
        "title": title or get_config().report_title,
        "labels": [label for label, _ in profiles],
        "profiles": [p for _, p in profiles],
        "matrices": [build_matrix_table(label, p.degree_type_matrix) for label, p in profiles],
        "adl_rows": [
            {"node_type": t.value, "cells": [p.adl.get(t) for _, p in profiles]}
            for t in adl_types
        ],
        "aebc_rows": [
            {"edge_type": t.value, "cells": [p.aebc.get(t) for _, p in profiles]}
            for t in aebc_types
        ],
        "wireless_shares": [p.wireless_ebc_share for _, p in profiles],
        "histograms": [
            {"label": label, "counts": p.psl_histogram.sorted_counts()} for label, p in profiles
        ],
        "comparison": comparison,
    }


def render_profile_page(
    profiles: Sequence[LabelledProfile],
    comparison: ComparisonReport | None = None,
    title: str | None = None,
) -> str:
    """Render labelled profiles (and an optional comparison) as a standalone page."""
    env = get_jinja_env()
    template = env.get_template("profile.html")
    return template.render(**build_page_context(profiles, comparison, title))
