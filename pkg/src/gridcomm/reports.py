"""Profile and comparison output formats.

- Profile JSON: stable document (sorted keys, reals rounded to 6 decimal
  places), see docs/profile-schema.md
- Histogram CSV: ``length,count`` rows for plotting
- Plain-text tables for profiles (side by side) and comparison reports
"""

from __future__ import annotations

import csv
import io
import json
from collections.abc import Sequence
from dataclasses import dataclass
from pathlib import Path
from typing import Any

from .compare import ComparisonReport
from .env import get_config
from .formatters import format_label, format_percent, format_value
from .metrics import DegreeTypeMatrix, PathLengthHistogram, StatisticsProfile
from .network import EdgeType, NodeType

PROFILE_SCHEMA = "gridcomm.profile/1"
REAL_DECIMALS = 6
HISTOGRAM_HEADER = ["length", "count"]

LabelledProfile = tuple[str, StatisticsProfile]


class ProfileFormatError(ValueError):
    """A profile document is malformed."""


def _real(value: float) -> float:
    # adding 0.0 folds -0.0 into 0.0
    return round(float(value), REAL_DECIMALS) + 0.0


# --- Profile JSON ---


def profile_to_json(profile: StatisticsProfile) -> dict[str, Any]:
    """Convert a profile to a JSON-serializable dict."""
    hist = profile.psl_histogram
    return {
        "schema": PROFILE_SCHEMA,
        "node_count": profile.node_count,
        "edge_count": profile.edge_count,
        "control_ids": list(profile.control_ids),
        "degree_type_matrix": {
            node_type.value: {edge_type.value: _real(v) for edge_type, v in row.items()}
            for node_type, row in profile.degree_type_matrix.cells.items()
        },
        "plc_fiber_ratio": _real(profile.plc_fiber_ratio),
        "adl": {t.value: _real(v) for t, v in profile.adl.items()},
        "psl_histogram": {
            "counts": [[length, count] for length, count in hist.sorted_counts()],
            "mean": _real(hist.mean),
            "mode": hist.mode,
            "std": _real(hist.std),
            "skewness": _real(hist.skewness),
        },
        "aebc": {t.value: _real(v) for t, v in profile.aebc.items()},
    }


def dumps_profile(profile: StatisticsProfile) -> str:
    """Serialize a profile as stable JSON text."""
    return json.dumps(profile_to_json(profile), indent=2, sort_keys=True) + "\n"


def _get(data: dict[str, Any], key: str, kind: type | tuple[type, ...], where: str) -> Any:
    if key not in data:
        raise ProfileFormatError(f"{where}: missing key {key!r}")
    value = data[key]
    if isinstance(value, bool) or not isinstance(value, kind):
        raise ProfileFormatError(f"{where}.{key}: unexpected value {value!r}")
    return value


def _number_map(data: Any, parse: Any, where: str) -> dict[Any, float]:
    if not isinstance(data, dict):
        raise ProfileFormatError(f"{where}: expected an object")
    result = {}
    for key, value in data.items():
        try:
            parsed = parse(key)
        except ValueError as e:
            raise ProfileFormatError(f"{where}: {e}") from e
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            raise ProfileFormatError(f"{where}.{key}: expected a number, got {value!r}")
        result[parsed] = float(value)
    return result


def _histogram_from_json(data: Any) -> PathLengthHistogram:
    where = "psl_histogram"
    if not isinstance(data, dict):
        raise ProfileFormatError(f"{where}: expected an object")
    raw_counts = _get(data, "counts", list, where)
    counts: dict[int, int] = {}
    for item in raw_counts:
        if (
            not isinstance(item, list)
            or len(item) != 2
            or any(isinstance(v, bool) or not isinstance(v, int) for v in item)
            or item[0] < 0
            or item[1] < 0
        ):
            raise ProfileFormatError(f"{where}.counts: bad entry {item!r}")
        counts[item[0]] = item[1]
    return PathLengthHistogram(
        counts=dict(sorted(counts.items())),
        mean=float(_get(data, "mean", (int, float), where)),
        mode=_get(data, "mode", int, where),
        std=float(_get(data, "std", (int, float), where)),
        skewness=float(_get(data, "skewness", (int, float), where)),
    )


def profile_from_json(data: Any) -> StatisticsProfile:
    """Rebuild a profile from its JSON form.

    Raises:
        ProfileFormatError: on missing keys, wrong types or unknown type tokens
    """
    where = "profile"
    if not isinstance(data, dict):
        raise ProfileFormatError("profile: expected a JSON object")
    schema = data.get("schema", PROFILE_SCHEMA)
    if schema != PROFILE_SCHEMA:
        raise ProfileFormatError(f"profile: unsupported schema {schema!r}")

    raw_matrix = _get(data, "degree_type_matrix", dict, where)
    cells: dict[NodeType, dict[EdgeType, float]] = {}
    for node_token, row in raw_matrix.items():
        try:
            node_type = NodeType.parse(node_token)
        except ValueError as e:
            raise ProfileFormatError(f"degree_type_matrix: {e}") from e
        cells[node_type] = _number_map(row, EdgeType.parse, f"degree_type_matrix.{node_token}")

    control_ids = _get(data, "control_ids", list, where) if "control_ids" in data else []
    if not all(isinstance(c, str) for c in control_ids):
        raise ProfileFormatError("profile.control_ids: expected a list of strings")

    return StatisticsProfile(
        node_count=_get(data, "node_count", int, where),
        edge_count=_get(data, "edge_count", int, where),
        degree_type_matrix=DegreeTypeMatrix(cells),
        plc_fiber_ratio=float(_get(data, "plc_fiber_ratio", (int, float), where)),
        adl=_number_map(_get(data, "adl", dict, where), NodeType.parse, "adl"),
        psl_histogram=_histogram_from_json(_get(data, "psl_histogram", dict, where)),
        aebc=_number_map(_get(data, "aebc", dict, where), EdgeType.parse, "aebc"),
        control_ids=list(control_ids),
    )


def load_profile(path: Path) -> StatisticsProfile:
    """Read a profile JSON file.

    Raises:
        OSError: if the file cannot be read
        ProfileFormatError: if the file is not a valid profile
    """
    raw = Path(path).read_bytes()
    try:
        text = raw.decode("utf-8")
    except UnicodeDecodeError as e:
        raise ProfileFormatError(f"{path}: not valid UTF-8 (byte {e.start})") from e
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ProfileFormatError(f"{path}: invalid JSON ({e})") from e
    return profile_from_json(data)


def histogram_to_csv(histogram: PathLengthHistogram) -> str:
    """Render histogram counts as ``length,count`` CSV, ascending by length."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(HISTOGRAM_HEADER)
    for length, count in histogram.sorted_counts():
        writer.writerow([length, count])
    return buf.getvalue()


# --- Comparison output ---


def comparison_to_json(report: ComparisonReport) -> dict[str, Any]:
    """Convert a comparison report to a JSON-serializable dict."""
    return {
        "passed": report.passed,
        "failed_count": len(report.failures),
        "entries": [
            {
                "name": e.name,
                "kind": e.kind,
                "reference": _real(e.reference),
                "candidate": _real(e.candidate),
                "delta": _real(e.delta),
                "tolerance": _real(e.tolerance),
                "passed": e.passed,
            }
            for e in report.entries
        ],
    }


# --- Fixed-width column formatting ---


@dataclass
class Column:
    """Define a fixed-width column for ASCII table formatting."""

    width: int
    align: str = "right"  # "left", "right", or "center"
    decimals: int = 3  # For float formatting

    def format(self, value: Any) -> str:
        """Format a value to fit this column width."""
        if value is None:
            text = "--"
        elif isinstance(value, float):
            text = f"{value:.{self.decimals}f}"
        else:
            text = str(value)

        if self.align == "left":
            return text.ljust(self.width)
        elif self.align == "center":
            return text.center(self.width)
        else:  # right
            return text.rjust(self.width)


def _format_row(columns: list[Column], values: list[Any]) -> str:
    """Format a row of values using column specs."""
    return "".join(col.format(val) for col, val in zip(columns, values, strict=False)).rstrip()


def _format_separator(columns: list[Column], char: str = "-") -> str:
    """Create a separator line matching column widths."""
    return char * sum(c.width for c in columns)


def format_comparison_txt(report: ComparisonReport) -> str:
    """Format a comparison report as an aligned plain-text table."""
    name_width = max([len("METRIC")] + [len(e.name) for e in report.entries]) + 2
    cols = [
        Column(name_width, align="left"),
        Column(12, decimals=6),  # REFERENCE
        Column(12, decimals=6),  # CANDIDATE
        Column(12, decimals=6),  # DELTA
        Column(10, decimals=4),  # TOL
        Column(8),  # RESULT
    ]

    lines = [
        _format_row(cols, ["METRIC", "REFERENCE", "CANDIDATE", "DELTA", "TOL", "RESULT"]),
        _format_separator(cols),
    ]
    for e in report.entries:
        lines.append(
            _format_row(
                cols,
                [e.name, e.reference, e.candidate, e.delta, e.tolerance, "pass" if e.passed else "FAIL"],
            )
        )
    lines.append(_format_separator(cols))

    failed = len(report.failures)
    if report.passed:
        lines.append(f"OVERALL: PASS ({len(report.entries)} metrics)")
    else:
        lines.append(f"OVERALL: FAIL ({failed} of {len(report.entries)} metrics out of tolerance)")
    return "\n".join(lines) + "\n"


# --- Profile text report ---


def _value_columns(labels: Sequence[str], first: int = 20) -> list[Column]:
    width = max([12] + [len(label) + 2 for label in labels])
    return [Column(first, align="left")] + [Column(width) for _ in labels]


def _matrix_section(label: str, matrix: DegreeTypeMatrix) -> list[str]:
    edge_types = matrix.edge_types
    cols = [Column(20, align="left")] + [Column(12) for _ in edge_types]
    lines = [
        f"DEGREE TYPE DISTRIBUTION: {label}",
        _format_row(cols, ["NODE TYPE"] + [format_label(t.value).upper() for t in edge_types]),
        _format_separator(cols),
    ]
    for node_type in NodeType:
        if node_type not in matrix.cells:
            continue
        lines.append(
            _format_row(
                cols,
                [format_label(node_type.value)]
                + [format_percent(matrix.get(node_type, t)) for t in edge_types],
            )
        )
    lines.append(_format_separator(cols))
    lines.append(
        _format_row(cols, ["Total"] + [format_percent(matrix.column_total(t)) for t in edge_types])
    )
    return lines


def format_profile_txt(
    profiles: Sequence[LabelledProfile],
    title: str | None = None,
    comparison: ComparisonReport | None = None,
) -> str:
    """Format one or more labelled profiles side by side.

    Node or edge types missing from a profile show as '--'. A comparison
    report, if given, is appended as its own table.
    """
    if title is None:
        title = get_config().report_title
    labels = [label for label, _ in profiles]
    cols = _value_columns(labels)
    width = sum(c.width for c in cols)

    lines = [title.upper().center(width).rstrip(), ""]

    lines.append("SUMMARY")
    lines.append(_format_row(cols, [""] + labels))
    lines.append(_format_separator(cols))
    lines.append(_format_row(cols, ["Nodes"] + [p.node_count for _, p in profiles]))
    lines.append(_format_row(cols, ["Edges"] + [p.edge_count for _, p in profiles]))
    lines.append(_format_row(cols, ["Control centers"] + [len(p.control_ids) for _, p in profiles]))
    lines.append(
        _format_row(cols, ["PLC-Fiber ratio"] + [format_percent(p.plc_fiber_ratio, 2) for _, p in profiles])
    )
    lines.append("")

    for label, profile in profiles:
        lines.extend(_matrix_section(label, profile.degree_type_matrix))
        lines.append("")

    lines.append("AVERAGE DEGREE LOAD")
    lines.append(_format_row(cols, ["NODE TYPE"] + labels))
    lines.append(_format_separator(cols))
    for node_type in NodeType:
        if not any(node_type in p.adl for _, p in profiles):
            continue
        lines.append(
            _format_row(
                cols, [format_label(node_type.value)] + [p.adl.get(node_type) for _, p in profiles]
            )
        )
    lines.append("")

    lines.append("PRIMARY SHORTEST PATHLENGTH")
    lines.append(_format_row(cols, [""] + labels))
    lines.append(_format_separator(cols))
    lines.append(_format_row(cols, ["Samples"] + [p.psl_histogram.sample_count for _, p in profiles]))
    lines.append(_format_row(cols, ["Mean"] + [p.psl_histogram.mean for _, p in profiles]))
    lines.append(_format_row(cols, ["Mode"] + [p.psl_histogram.mode for _, p in profiles]))
    lines.append(_format_row(cols, ["Std (n-1)"] + [p.psl_histogram.std for _, p in profiles]))
    lines.append(_format_row(cols, ["Skewness"] + [p.psl_histogram.skewness for _, p in profiles]))
    lines.append("")

    lines.append("AVERAGE EDGE BETWEENNESS CENTRALITY")
    lines.append(_format_row(cols, ["EDGE TYPE"] + labels))
    lines.append(_format_separator(cols))
    for edge_type in EdgeType:
        if not any(edge_type in p.aebc for _, p in profiles):
            continue
        lines.append(
            _format_row(
                cols,
                [format_label(edge_type.value)]
                + [
                    format_value(p.aebc[edge_type], 2) if edge_type in p.aebc else None
                    for _, p in profiles
                ],
            )
        )
    lines.append(_format_separator(cols))
    lines.append(
        _format_row(
            cols, ["Wireless share"] + [format_percent(p.wireless_ebc_share) for _, p in profiles]
        )
    )

    text = "\n".join(lines) + "\n"
    if comparison is not None:
        text += "\nCOMPARISON\n" + format_comparison_txt(comparison)
    return text
