"""Canonical node/edge CSV format: parsing, export and island pruning.

nodes file::

    node_id,label,node_type
    cc1,"Control Center, North",control_center

edges file::

    edge_id,source_id,target_id,edge_type
    e1,cc1,t1,fiber

UTF-8, LF line endings, one header row. Ids match ``[A-Za-z0-9_.-]+``;
labels may be double-quoted to carry commas. Unknown type tokens are
rejected, never coerced.
"""

from __future__ import annotations

import csv
import io
import re
from dataclasses import dataclass, field
from pathlib import Path

from . import log
from .network import (
    Edge,
    EdgeType,
    EmptyNetworkError,
    Network,
    NetworkError,
    Node,
    NodeType,
)

NODES_HEADER = ["node_id", "label", "node_type"]
EDGES_HEADER = ["edge_id", "source_id", "target_id", "edge_type"]
ID_RE = re.compile(r"^[A-Za-z0-9_.-]+$")


class ParseError(NetworkError):
    """A row of a network file could not be parsed.

    Attributes:
        source: "nodes" or "edges"
        line: 1-based line number of the offending row
    """

    def __init__(self, source: str, line: int, message: str) -> None:
        self.source = source
        self.line = line
        super().__init__(f"{source} file, line {line}: {message}")


@dataclass
class PruneReport:
    """What prune_islands removed."""

    removed_node_ids: list[str] = field(default_factory=list)
    removed_edge_ids: list[str] = field(default_factory=list)
    kept_component_size: int = 0

    @property
    def is_empty(self) -> bool:
        return not self.removed_node_ids and not self.removed_edge_ids


def _rows(text: str, source: str, header: list[str]) -> list[tuple[int, list[str]]]:
    """Split CSV text into (line number, fields) rows after checking the header."""
    reader = csv.reader(io.StringIO(text, newline=""))
    rows: list[tuple[int, list[str]]] = []
    header_seen = False

    for fields in reader:
        line = reader.line_num
        if not fields or (len(fields) == 1 and not fields[0].strip()):
            continue  # blank line
        if not header_seen:
            if fields != header:
                raise ParseError(source, line, f"expected header {','.join(header)!r}")
            header_seen = True
            continue
        if len(fields) != len(header):
            raise ParseError(
                source, line, f"expected {len(header)} columns, got {len(fields)}"
            )
        rows.append((line, fields))

    if not header_seen:
        raise ParseError(source, 1, f"missing header {','.join(header)!r}")
    return rows


def _check_id(source: str, line: int, kind: str, value: str) -> str:
    if not ID_RE.match(value):
        raise ParseError(source, line, f"invalid {kind} {value!r}")
    return value


def parse_network(nodes_text: str, edges_text: str) -> Network:
    """Build a Network from canonical nodes/edges CSV text.

    Raises:
        ParseError: on a malformed row, unknown type token, edge referencing
            a missing node, self-loop or duplicate id; the message names the
            file and line number.
    """
    network = Network()

    for line, (node_id, label, type_token) in _rows(nodes_text, "nodes", NODES_HEADER):
        _check_id("nodes", line, "node id", node_id)
        try:
            network.add_node(Node(node_id, label, NodeType.parse(type_token)))
        except ValueError as e:
            raise ParseError("nodes", line, str(e)) from e

    for line, (edge_id, source_id, target_id, type_token) in _rows(
        edges_text, "edges", EDGES_HEADER
    ):
        _check_id("edges", line, "edge id", edge_id)
        _check_id("edges", line, "source id", source_id)
        _check_id("edges", line, "target id", target_id)
        try:
            network.add_edge(Edge(edge_id, source_id, target_id, EdgeType.parse(type_token)))
        except ValueError as e:
            raise ParseError("edges", line, str(e)) from e

    log.debug(f"Parsed network: {network.node_count} nodes, {network.edge_count} edges")
    return network


def export_network(network: Network) -> tuple[str, str]:
    """Serialize a network to canonical (nodes_text, edges_text), rows sorted by id."""
    nodes_buf = io.StringIO()
    writer = csv.writer(nodes_buf, lineterminator="\n")
    writer.writerow(NODES_HEADER)
    for node in network.iter_nodes():
        writer.writerow([node.id, node.label, node.node_type.value])

    edges_buf = io.StringIO()
    writer = csv.writer(edges_buf, lineterminator="\n")
    writer.writerow(EDGES_HEADER)
    for edge in network.iter_edges():
        writer.writerow([edge.id, edge.source, edge.target, edge.edge_type.value])

    return nodes_buf.getvalue(), edges_buf.getvalue()


def _read_utf8(path: Path, source: str) -> str:
    data = Path(path).read_bytes()
    try:
        return data.decode("utf-8")
    except UnicodeDecodeError as e:
        line = data.count(b"\n", 0, e.start) + 1
        raise ParseError(source, line, f"{path} is not valid UTF-8 (byte {e.start})") from e


def load_network(nodes_path: Path, edges_path: Path) -> Network:
    """Read and parse a network from a pair of files.

    Raises:
        OSError: if either file cannot be read
        ParseError: if the content is not UTF-8 or is malformed
    """
    nodes_text = _read_utf8(nodes_path, "nodes")
    edges_text = _read_utf8(edges_path, "edges")
    return parse_network(nodes_text, edges_text)


def write_network(network: Network, nodes_path: Path, edges_path: Path) -> None:
    """Write a network as canonical files, creating parent directories."""
    nodes_text, edges_text = export_network(network)
    for path, text in ((Path(nodes_path), nodes_text), (Path(edges_path), edges_text)):
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text, encoding="utf-8", newline="\n")


def prune_islands(network: Network) -> tuple[Network, PruneReport]:
    """Keep only the largest connected component.

    Ties between equally large components go to the one holding the
    smallest node id. The input network is not modified.

    Raises:
        EmptyNetworkError: if the network has no nodes
    """
    components = network.connected_components()
    if not components:
        raise EmptyNetworkError("Cannot prune an empty network")

    # components are ordered by smallest member, so max() keeps the first of a tie
    keep = max(components, key=len)
    pruned = network.subgraph(keep)

    report = PruneReport(
        removed_node_ids=sorted(set(network.nodes) - keep),
        removed_edge_ids=sorted(set(network.edges) - set(pruned.edges)),
        kept_component_size=len(keep),
    )
    if not report.is_empty:
        log.debug(
            f"Pruned {len(report.removed_node_ids)} island nodes and "
            f"{len(report.removed_edge_ids)} edges; kept {len(keep)} nodes"
        )
    return pruned, report
