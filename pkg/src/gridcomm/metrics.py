"""Network statistics.

- Degree-type distribution: each link of type t between stations of types A
  and B puts weight 1/2 on cell (A, t) and 1/2 on cell (B, t); cells are
  normalized by the link count, so columns add up to the share of each
  link type.
- PLC-Fiber ratio: share of links whose medium follows transmission lines.
- Average degree load (ADL): mean incident-link count per station type.
- Primary shortest pathlength (PSL): hop count from each station to its
  nearest control center; summarized as a histogram with Pearson's first
  skewness coefficient (mean - mode) / std, using the sample std.
- Edge betweenness (EBC): unnormalized pair-based sums over the collapsed
  simple graph; parallel links inherit their representative's value.
  AEBC is the mean EBC per typed link type; the wireless share weights
  microwave and radio AEBC by their link shares.
"""

from __future__ import annotations

from collections import Counter, defaultdict
from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field

import networkx as nx
import numpy as np

from . import log
from .env import get_config
from .network import (
    DisconnectedNetworkError,
    EdgeType,
    EmptyNetworkError,
    InvalidControlError,
    Network,
    NodeType,
)

TRANSMISSION_LINE_MEDIA = (EdgeType.PLC, EdgeType.FIBER)
WIRELESS_MEDIA = (EdgeType.MICROWAVE, EdgeType.RADIO)


@dataclass(frozen=True)
class DegreeTypeMatrix:
    """Fraction of link endpoints per (node type, edge type).

    Only cells that received weight are stored.
    """

    cells: dict[NodeType, dict[EdgeType, float]] = field(default_factory=dict)

    def get(self, node_type: NodeType, edge_type: EdgeType) -> float:
        return self.cells.get(node_type, {}).get(edge_type, 0.0)

    @property
    def edge_types(self) -> list[EdgeType]:
        """Edge types with at least one non-empty cell, in declaration order."""
        present = {t for row in self.cells.values() for t in row}
        return [t for t in EdgeType if t in present]

    @property
    def node_types(self) -> list[NodeType]:
        return [t for t in NodeType if t in self.cells]

    def column_total(self, edge_type: EdgeType) -> float:
        return sum(row.get(edge_type, 0.0) for row in self.cells.values())

    def total(self) -> float:
        return sum(sum(row.values()) for row in self.cells.values())


@dataclass(frozen=True)
class PathLengthHistogram:
    """Distribution of integer hop counts with summary statistics."""

    counts: dict[int, int]
    mean: float
    mode: int
    std: float
    skewness: float

    @property
    def sample_count(self) -> int:
        return sum(self.counts.values())

    @property
    def is_empty(self) -> bool:
        return not self.counts

    def sorted_counts(self) -> list[tuple[int, int]]:
        return sorted(self.counts.items())


@dataclass(frozen=True)
class StatisticsProfile:
    """Every statistic computed for one network."""

    node_count: int
    edge_count: int
    degree_type_matrix: DegreeTypeMatrix
    plc_fiber_ratio: float
    adl: dict[NodeType, float]
    psl_histogram: PathLengthHistogram
    aebc: dict[EdgeType, float]
    control_ids: list[str] = field(default_factory=list)

    @property
    def wireless_ebc_share(self) -> float | None:
        """Share of all link betweenness carried by microwave and radio links.

        Each type's AEBC is weighted by its link share from the degree-type
        matrix. None when the profile has no typed betweenness.
        """
        matrix = self.degree_type_matrix
        carried = {
            t: v * matrix.column_total(t)
            for t, v in self.aebc.items()
            if t is not EdgeType.UNTYPED
        }
        total = sum(carried.values())
        if total <= 0:
            return None
        return sum(v for t, v in carried.items() if t in WIRELESS_MEDIA) / total


def _require_edges(network: Network, what: str) -> None:
    if network.edge_count == 0:
        raise EmptyNetworkError(f"{what} requires at least one edge")


def degree_type_matrix(network: Network) -> DegreeTypeMatrix:
    """Degree-type distribution with the half-weight-per-endpoint convention.

    Raises:
        EmptyNetworkError: if the network has no edges
    """
    _require_edges(network, "Degree type distribution")

    weights: dict[NodeType, dict[EdgeType, float]] = defaultdict(lambda: defaultdict(float))
    for edge in network.iter_edges():
        for endpoint in (edge.source, edge.target):
            node_type = network.nodes[endpoint].node_type
            weights[node_type][edge.edge_type] += 0.5

    total = network.edge_count
    cells = {
        node_type: {edge_type: w / total for edge_type, w in row.items()}
        for node_type, row in weights.items()
    }
    return DegreeTypeMatrix(cells)


def plc_fiber_ratio(network: Network) -> float:
    """Share of PLC and fiber links among all links (parallels counted).

    Raises:
        EmptyNetworkError: if the network has no edges
    """
    _require_edges(network, "PLC-Fiber ratio")
    hits = sum(1 for e in network.edges.values() if e.edge_type in TRANSMISSION_LINE_MEDIA)
    return hits / network.edge_count


def average_degree_load(network: Network) -> dict[NodeType, float]:
    """Mean degree per node type; types without nodes are omitted."""
    degrees: dict[NodeType, list[int]] = defaultdict(list)
    for node in network.iter_nodes():
        degrees[node.node_type].append(network.degree(node.id))
    return {t: sum(degrees[t]) / len(degrees[t]) for t in NodeType if t in degrees}


def default_control_ids(network: Network) -> list[str]:
    """Control centers auto-detected from the configured node type.

    Raises:
        InvalidControlError: if GRIDCOMM_CONTROL_TYPE is not a node type token
    """
    token = get_config().control_type
    try:
        control_type = NodeType.parse(token)
    except ValueError as e:
        raise InvalidControlError(f"GRIDCOMM_CONTROL_TYPE: {e}") from e
    return network.nodes_of_type(control_type)


def validate_controls(network: Network, control_ids: Iterable[str]) -> list[str]:
    """Check a control list and return it de-duplicated and sorted.

    Raises:
        InvalidControlError: if the list is empty or names unknown nodes
    """
    controls = sorted(set(control_ids))
    if not controls:
        raise InvalidControlError("No control centers given")
    unknown = [c for c in controls if c not in network.nodes]
    if unknown:
        raise InvalidControlError(f"Unknown control center ids: {', '.join(unknown)}")
    return controls


def require_connected(network: Network) -> nx.Graph:
    """Return the collapsed graph of a connected network.

    Raises:
        EmptyNetworkError: if the network has no nodes
        DisconnectedNetworkError: if it has more than one component
    """
    graph = network.to_graph()
    if graph.number_of_nodes() == 0:
        raise EmptyNetworkError("Network has no nodes")
    if not nx.is_connected(graph):
        components = nx.number_connected_components(graph)
        raise DisconnectedNetworkError(f"Network is disconnected ({components} components)")
    return graph


def primary_shortest_lengths(network: Network, control_ids: Iterable[str]) -> dict[str, int]:
    """Hop count from every node to its nearest control center.

    One breadth-first search per control center on the collapsed graph
    (uniform weights), keeping the minimum per node. Control centers map to 0.

    Raises:
        DisconnectedNetworkError: if the network is not connected
        InvalidControlError: if the control list is empty or invalid
    """
    controls = validate_controls(network, control_ids)
    graph = require_connected(network)

    primary: dict[str, int] = {}
    for control in controls:
        for node_id, length in nx.single_source_shortest_path_length(graph, control).items():
            if node_id not in primary or length < primary[node_id]:
                primary[node_id] = length
    return dict(sorted(primary.items()))


def psl_histogram(lengths: Mapping[str, int] | Iterable[int]) -> PathLengthHistogram:
    """Summarize hop counts; accepts a node->length map or plain samples.

    Mode ties go to the smallest length. The standard deviation uses the
    n-1 denominator; a single sample, or any constant sample set, has
    std 0 and skewness 0.

    Raises:
        ValueError: if there are no samples
    """
    samples = list(lengths.values()) if isinstance(lengths, Mapping) else list(lengths)
    if not samples:
        raise ValueError("Path length histogram needs at least one sample")

    counts = Counter(int(s) for s in samples)
    values = np.asarray(samples, dtype=float)
    mean = float(values.mean())
    std = float(values.std(ddof=1)) if values.size > 1 else 0.0
    top = max(counts.values())
    mode = min(length for length, c in counts.items() if c == top)
    skewness = (mean - mode) / std if std > 0 else 0.0

    return PathLengthHistogram(
        counts=dict(sorted(counts.items())),
        mean=mean,
        mode=mode,
        std=std,
        skewness=skewness,
    )


def edge_betweenness(network: Network) -> dict[str, float]:
    """Unnormalized edge betweenness for every original edge id."""
    view = network.collapse_parallel()
    if view.edge_count == 0:
        return {}

    # normalized=False halves ordered-pair sums on undirected graphs,
    # giving the per-unordered-pair sum
    by_pair = nx.edge_betweenness_centrality(view.graph, normalized=False)

    values: dict[str, float] = {}
    for (a, b), value in by_pair.items():
        pair = (a, b) if a <= b else (b, a)
        for edge_id in view.multiplicity[pair]:
            values[edge_id] = float(value)
    return dict(sorted(values.items()))


def average_ebc_by_type(
    network: Network, ebc: Mapping[str, float] | None = None
) -> dict[EdgeType, float]:
    """Mean edge betweenness per edge type over the original edges.

    Untyped links are left out, so a simplified network yields an empty map.

    Args:
        network: Network to measure
        ebc: Precomputed edge_betweenness result, if available

    Raises:
        EmptyNetworkError: if the network has no edges
    """
    _require_edges(network, "Average edge betweenness")
    if ebc is None:
        ebc = edge_betweenness(network)

    by_type: dict[EdgeType, list[float]] = defaultdict(list)
    for edge in network.iter_edges():
        if edge.edge_type is not EdgeType.UNTYPED:
            by_type[edge.edge_type].append(ebc[edge.id])
    return {t: sum(by_type[t]) / len(by_type[t]) for t in EdgeType if t in by_type}


def statistics_profile(
    network: Network, control_ids: Iterable[str] | None = None
) -> StatisticsProfile:
    """Compute every statistic for a network.

    Args:
        network: Connected network with at least one edge
        control_ids: Control center ids; defaults to every node of the
            configured control type

    Raises:
        DisconnectedNetworkError, EmptyNetworkError, InvalidControlError
    """
    require_connected(network)
    _require_edges(network, "Statistics profile")
    controls = validate_controls(
        network, default_control_ids(network) if control_ids is None else control_ids
    )

    matrix = degree_type_matrix(network)
    lengths = primary_shortest_lengths(network, controls)
    ebc = edge_betweenness(network)

    profile = StatisticsProfile(
        node_count=network.node_count,
        edge_count=network.edge_count,
        degree_type_matrix=matrix,
        plc_fiber_ratio=plc_fiber_ratio(network),
        adl=average_degree_load(network),
        psl_histogram=psl_histogram(lengths),
        aebc=average_ebc_by_type(network, ebc),
        control_ids=controls,
    )
    log.debug(
        f"Profile: {profile.node_count} nodes, {profile.edge_count} edges, "
        f"{len(controls)} control centers"
    )
    return profile
