"""Score a candidate statistics profile against a reference profile.

Bounded metrics (matrix cells, PLC-Fiber ratio, ADL, PSL skewness) use
absolute deltas. AEBC grows with network size, so it uses a relative delta
|ref - cand| / max(|ref|, |cand|), which is symmetric and lies in [0, 1].
A map key present on one side only compares against 0.
"""

from __future__ import annotations

from dataclasses import dataclass, field, fields, replace

from .env import get_config
from .metrics import StatisticsProfile

# Metric kinds, one per ToleranceSpec field
MATRIX_CELL = "matrix_cell"
RATIO = "ratio"
ADL = "adl"
SKEWNESS = "skewness"
AEBC_RELATIVE = "aebc_relative"


class ToleranceError(ValueError):
    """A tolerance is negative or unknown."""


@dataclass(frozen=True)
class ToleranceSpec:
    """Per-metric tolerances (all >= 0)."""

    matrix_cell: float = 0.02
    ratio: float = 0.02
    adl: float = 0.25
    skewness: float = 0.10
    aebc_relative: float = 0.25

    def __post_init__(self) -> None:
        for f in fields(self):
            value = getattr(self, f.name)
            if value < 0:
                raise ToleranceError(f"Tolerance {f.name} must be >= 0, got {value}")

    @classmethod
    def from_config(cls) -> ToleranceSpec:
        """Defaults taken from GRIDCOMM_TOL_* settings."""
        cfg = get_config()
        return cls(
            matrix_cell=cfg.tol_matrix_cell,
            ratio=cfg.tol_ratio,
            adl=cfg.tol_adl,
            skewness=cfg.tol_skewness,
            aebc_relative=cfg.tol_aebc_relative,
        )

    def with_overrides(self, overrides: dict[str, float]) -> ToleranceSpec:
        """Return a copy with some tolerances replaced."""
        known = {f.name for f in fields(self)}
        unknown = sorted(set(overrides) - known)
        if unknown:
            raise ToleranceError(f"Unknown tolerance metric(s): {', '.join(unknown)}")
        return replace(self, **overrides)


@dataclass(frozen=True)
class ComparisonEntry:
    """One compared value."""

    name: str
    kind: str
    reference: float
    candidate: float
    delta: float
    tolerance: float

    @property
    def passed(self) -> bool:
        return self.delta <= self.tolerance


@dataclass
class ComparisonReport:
    """All comparison entries; passes only if every entry passes."""

    entries: list[ComparisonEntry] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(e.passed for e in self.entries)

    @property
    def failures(self) -> list[ComparisonEntry]:
        return [e for e in self.entries if not e.passed]


def relative_delta(a: float, b: float) -> float:
    """Symmetric relative difference; 0 when both values are 0."""
    scale = max(abs(a), abs(b))
    if scale == 0:
        return 0.0
    return abs(a - b) / scale


def _entry(name: str, kind: str, ref: float, cand: float, tolerance: float) -> ComparisonEntry:
    if kind == AEBC_RELATIVE:
        delta = relative_delta(ref, cand)
    else:
        delta = abs(ref - cand)
    return ComparisonEntry(name, kind, ref, cand, delta, tolerance)


def _map_entries(
    prefix: str,
    kind: str,
    ref: dict[str, float],
    cand: dict[str, float],
    tolerance: float,
) -> list[ComparisonEntry]:
    return [
        _entry(f"{prefix}.{key}", kind, ref.get(key, 0.0), cand.get(key, 0.0), tolerance)
        for key in sorted(set(ref) | set(cand))
    ]


def _flat_matrix(profile: StatisticsProfile) -> dict[str, float]:
    return {
        f"{node_type.value}.{edge_type.value}": value
        for node_type, row in profile.degree_type_matrix.cells.items()
        for edge_type, value in row.items()
    }


def compare_profiles(
    reference: StatisticsProfile,
    candidate: StatisticsProfile,
    tolerances: ToleranceSpec | None = None,
) -> ComparisonReport:
    """Compare two profiles metric by metric.

    Entries are ordered: PLC-Fiber ratio, PSL skewness, matrix cells, ADL,
    AEBC (map entries sorted by key).
    """
    tol = tolerances if tolerances is not None else ToleranceSpec.from_config()

    entries = [
        _entry("plc_fiber_ratio", RATIO, reference.plc_fiber_ratio, candidate.plc_fiber_ratio, tol.ratio),
        _entry(
            "psl.skewness",
            SKEWNESS,
            reference.psl_histogram.skewness,
            candidate.psl_histogram.skewness,
            tol.skewness,
        ),
    ]
    entries += _map_entries(
        "matrix", MATRIX_CELL, _flat_matrix(reference), _flat_matrix(candidate), tol.matrix_cell
    )
    entries += _map_entries(
        "adl",
        ADL,
        {t.value: v for t, v in reference.adl.items()},
        {t.value: v for t, v in candidate.adl.items()},
        tol.adl,
    )
    entries += _map_entries(
        "aebc",
        AEBC_RELATIVE,
        {t.value: v for t, v in reference.aebc.items()},
        {t.value: v for t, v in candidate.aebc.items()},
        tol.aebc_relative,
    )
    return ComparisonReport(entries)
