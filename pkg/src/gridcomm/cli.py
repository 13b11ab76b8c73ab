"""Command-line front end.

Subcommands:
    stats         network files -> statistics profile JSON
    simplify      network files -> simplified network files
    compare       reference profile + candidate profile -> comparison report
    plot-data     profile -> PSL histogram CSV
    routes        network files -> primary route CSV
    assign-types  untyped network + reference profile -> typed network files
    report        profiles -> side-by-side text or HTML report

Exit codes: 0 success / comparison pass, 1 input error, 2 precondition
violation, 3 comparison fail. Results go to stdout (or --out); diagnostics
go to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections.abc import Sequence
from dataclasses import fields
from pathlib import Path

from . import __version__, log
from .assign import ReferenceProfileError, assign_edge_types
from .compare import ToleranceError, ToleranceSpec, compare_profiles
from .env import get_config
from .html import render_profile_page
from .ingest import ParseError, load_network, prune_islands, write_network
from .metrics import default_control_ids, statistics_profile
from .network import (
    DisconnectedNetworkError,
    EmptyNetworkError,
    InvalidControlError,
    Network,
)
from .reports import (
    ProfileFormatError,
    comparison_to_json,
    dumps_profile,
    format_comparison_txt,
    format_profile_txt,
    histogram_to_csv,
    load_profile,
)
from .routing import primary_routes, routes_to_csv
from .simplify import simplify

EXIT_OK = 0
EXIT_INPUT_ERROR = 1
EXIT_PRECONDITION = 2
EXIT_COMPARISON_FAILED = 3

NODES_FILE = "nodes.csv"
EDGES_FILE = "edges.csv"

INPUT_ERRORS = (OSError, ParseError, ProfileFormatError, ReferenceProfileError, ToleranceError)
PRECONDITION_ERRORS = (DisconnectedNetworkError, EmptyNetworkError, InvalidControlError)


class _ArgumentParser(argparse.ArgumentParser):
    """ArgumentParser whose usage errors exit with the input-error code."""

    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        log.error(message)
        raise SystemExit(EXIT_INPUT_ERROR)


def safe_write(path: Path, content: str) -> bool:
    """Write content to file with error handling.

    Args:
        path: File path to write to
        content: Content to write

    Returns:
        True if write succeeded, False otherwise
    """
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(content, encoding="utf-8", newline="\n")
        return True
    except OSError as e:
        log.error(f"Failed to write {path}: {e}")
        return False


def emit(content: str, out: Path | None) -> int:
    """Send command output to --out or stdout."""
    if out is None:
        sys.stdout.write(content)
        sys.stdout.flush()
        return EXIT_OK
    if not safe_write(out, content):
        return EXIT_INPUT_ERROR
    log.debug(f"Wrote {out}")
    return EXIT_OK


def parse_control_list(value: str | None) -> list[str] | None:
    """Split ``--controls a,b`` into ids; None means auto-detect."""
    if value is None:
        return None
    return [token.strip() for token in value.split(",") if token.strip()]


def load_input_network(args: argparse.Namespace) -> Network:
    """Load --nodes/--edges, pruning islands when requested."""
    network = load_network(args.nodes, args.edges)
    log.debug(f"Loaded {network.node_count} nodes, {network.edge_count} edges from {args.nodes}")
    if getattr(args, "prune_islands", False):
        network, report = prune_islands(network)
        if not report.is_empty:
            log.info(
                f"Pruned {len(report.removed_node_ids)} island nodes: "
                f"{', '.join(report.removed_node_ids)}"
            )
    return network


def resolve_controls(args: argparse.Namespace, network: Network) -> list[str]:
    """Explicit --controls, or auto-detected control centers (listed on stderr)."""
    controls = parse_control_list(args.controls)
    if controls is not None:
        return controls

    controls = default_control_ids(network)
    if not controls:
        raise InvalidControlError(
            f"No {get_config().control_type} nodes found; pass --controls"
        )
    log.info(f"Auto-detected control centers: {', '.join(controls)}")
    return controls


# --- Commands ---


def cmd_stats(args: argparse.Namespace) -> int:
    """Compute a statistics profile."""
    network = load_input_network(args)
    controls = resolve_controls(args, network)
    profile = statistics_profile(network, controls)
    return emit(dumps_profile(profile), args.out)


def cmd_simplify(args: argparse.Namespace) -> int:
    """Write the simplified network and print its counts."""
    network = load_input_network(args)
    simplified = simplify(network)
    write_network(simplified, args.out / NODES_FILE, args.out / EDGES_FILE)
    log.info(f"Wrote simplified network to {args.out}")
    print(f"{simplified.node_count} nodes, {simplified.edge_count} edges")
    return EXIT_OK


def tolerance_overrides(args: argparse.Namespace) -> dict[str, float]:
    overrides = {}
    for f in fields(ToleranceSpec):
        value = getattr(args, f"tol_{f.name}")
        if value is not None:
            overrides[f.name] = value
    return overrides


def cmd_compare(args: argparse.Namespace) -> int:
    """Compare a candidate profile to a reference profile."""
    reference = load_profile(args.reference)
    candidate = load_profile(args.candidate)
    tolerances = ToleranceSpec.from_config().with_overrides(tolerance_overrides(args))

    report = compare_profiles(reference, candidate, tolerances)
    if args.json:
        content = json.dumps(comparison_to_json(report), indent=2, sort_keys=True) + "\n"
    else:
        content = format_comparison_txt(report)

    status = emit(content, args.out)
    if status != EXIT_OK:
        return status
    if not report.passed:
        log.warn(f"Comparison failed: {', '.join(e.name for e in report.failures)}")
        return EXIT_COMPARISON_FAILED
    return EXIT_OK


def cmd_plot_data(args: argparse.Namespace) -> int:
    """Emit the PSL histogram of a profile as CSV."""
    profile = load_profile(args.profile)
    return emit(histogram_to_csv(profile.psl_histogram), args.out)


def cmd_routes(args: argparse.Namespace) -> int:
    """Emit each node's primary route to a control center."""
    network = load_input_network(args)
    controls = resolve_controls(args, network)
    return emit(routes_to_csv(primary_routes(network, controls)), args.out)


def cmd_assign_types(args: argparse.Namespace) -> int:
    """Type untyped links after a reference profile."""
    network = load_input_network(args)
    reference = load_profile(args.profile)
    typed, assigned = assign_edge_types(network, reference)
    write_network(typed, args.out / NODES_FILE, args.out / EDGES_FILE)
    log.info(f"Assigned types to {len(assigned)} links; wrote {args.out}")
    return EXIT_OK


def parse_profile_arg(value: str) -> tuple[str, Path]:
    """``label=path`` or ``path`` (label taken from the file stem)."""
    label, sep, path = value.partition("=")
    if sep and label:
        return label, Path(path)
    return Path(value).stem, Path(value)


def cmd_report(args: argparse.Namespace) -> int:
    """Render one or more profiles side by side.

    With --compare the second profile is checked against the first using
    the configured tolerances; the result is shown but does not set the
    exit code.
    """
    if args.compare and len(args.profiles) < 2:
        log.error("--compare needs a reference and a candidate profile")
        return EXIT_INPUT_ERROR
    profiles = [(label, load_profile(path)) for label, path in map(parse_profile_arg, args.profiles)]

    comparison = None
    if args.compare:
        comparison = compare_profiles(profiles[0][1], profiles[1][1], ToleranceSpec.from_config())

    if args.html:
        content = render_profile_page(profiles, title=args.title, comparison=comparison)
    else:
        content = format_profile_txt(profiles, title=args.title, comparison=comparison)
    return emit(content, args.out)


# --- Parser ---


def _add_network_args(parser: argparse.ArgumentParser, controls: bool = True) -> None:
    parser.add_argument("--nodes", type=Path, required=True, help="Nodes CSV file")
    parser.add_argument("--edges", type=Path, required=True, help="Edges CSV file")
    parser.add_argument(
        "--prune-islands",
        action="store_true",
        help="Keep only the largest connected component",
    )
    if controls:
        parser.add_argument(
            "--controls",
            metavar="ID,...",
            help="Control center ids (default: every control_center node)",
        )


def build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(
        prog="gridcomm",
        description="Statistics for utility communication network models.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("stats", help="Compute a statistics profile (JSON)")
    _add_network_args(p)
    p.add_argument("--out", type=Path, help="Write the profile here instead of stdout")
    p.set_defaults(handler=cmd_stats)

    p = sub.add_parser("simplify", help="Collapse microwave stations")
    _add_network_args(p, controls=False)
    p.add_argument("--out", type=Path, required=True, help="Output directory")
    p.set_defaults(handler=cmd_simplify)

    p = sub.add_parser("compare", help="Compare a candidate profile to a reference")
    p.add_argument("reference", type=Path, help="Reference profile JSON")
    p.add_argument("candidate", type=Path, help="Candidate profile JSON")
    p.add_argument("--json", action="store_true", help="Emit the report as JSON")
    p.add_argument("--out", type=Path, help="Write the report here instead of stdout")
    for f in fields(ToleranceSpec):
        p.add_argument(
            f"--tol.{f.name}",
            dest=f"tol_{f.name}",
            type=float,
            metavar="VALUE",
            help=f"Tolerance for {f.name} (default {f.default})",
        )
    p.set_defaults(handler=cmd_compare)

    p = sub.add_parser("plot-data", help="PSL histogram of a profile as CSV")
    p.add_argument("profile", type=Path, help="Profile JSON")
    p.add_argument("--out", type=Path, help="Write the CSV here instead of stdout")
    p.set_defaults(handler=cmd_plot_data)

    p = sub.add_parser("routes", help="Primary route of every node (CSV)")
    _add_network_args(p)
    p.add_argument("--out", type=Path, help="Write the CSV here instead of stdout")
    p.set_defaults(handler=cmd_routes)

    p = sub.add_parser("assign-types", help="Type untyped links from a reference profile")
    _add_network_args(p, controls=False)
    p.add_argument("--profile", type=Path, required=True, help="Reference profile JSON")
    p.add_argument("--out", type=Path, required=True, help="Output directory")
    p.set_defaults(handler=cmd_assign_types)

    p = sub.add_parser("report", help="Side-by-side profile report")
    p.add_argument("profiles", nargs="+", metavar="[LABEL=]PROFILE", help="Profile JSON files")
    p.add_argument("--html", action="store_true", help="Render HTML instead of text")
    p.add_argument(
        "--compare",
        action="store_true",
        help="Append a comparison of the second profile against the first",
    )
    p.add_argument("--title", help="Report title")
    p.add_argument("--out", type=Path, help="Write the report here instead of stdout")
    p.set_defaults(handler=cmd_report)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    """Run the command line and return its exit code."""
    args = build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except INPUT_ERRORS as e:
        log.error(str(e))
        return EXIT_INPUT_ERROR
    except PRECONDITION_ERRORS as e:
        hint = " (use --prune-islands)" if isinstance(e, DisconnectedNetworkError) else ""
        log.error(f"{e}{hint}")
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())
