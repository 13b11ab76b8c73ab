"""Typed undirected multigraph of stations and communication links.

The network keeps three indexes in step with each other:

- ``nodes``: node id -> Node
- ``edges``: edge id -> Edge
- an adjacency index keyed by the sorted endpoint pair, listing edge ids

Parallel edges (same endpoints, distinct ids) are allowed; self-loops are
not. Every iteration order exposed here is sorted by id so that everything
built on top (simplification, exports, reports) is reproducible.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from dataclasses import dataclass, field, replace
from enum import StrEnum

import networkx as nx

EndpointPair = tuple[str, str]


class NetworkError(ValueError):
    """Base class for network model errors."""


class DuplicateIdError(NetworkError):
    """A node or edge id is already in use."""


class UnknownNodeError(NetworkError):
    """A node id does not exist in the network."""


class SelfLoopError(NetworkError):
    """An edge would connect a node to itself."""


class DisconnectedNetworkError(NetworkError):
    """An operation requires a connected network."""


class EmptyNetworkError(NetworkError):
    """An operation requires at least one node or edge."""


class InvalidControlError(NetworkError):
    """The control center list is empty or names unknown nodes."""


class NodeType(StrEnum):
    """Station categories."""

    MICROWAVE = "microwave"
    TRANSMISSION = "transmission"
    GENERATING = "generating"
    OFFICE = "office"
    CONTROL_CENTER = "control_center"
    REPEATER = "repeater"
    CONNECTOR = "connector"
    OTHER = "other"

    @classmethod
    def parse(cls, token: str) -> NodeType:
        """Parse a node type token, rejecting anything outside the closed set."""
        try:
            return cls(token)
        except ValueError:
            allowed = ", ".join(t.value for t in cls)
            raise ValueError(f"Unknown node type {token!r} (expected one of: {allowed})") from None


class EdgeType(StrEnum):
    """Link media. ``untyped`` marks links produced or stripped by simplification."""

    MICROWAVE = "microwave"
    PLC = "plc"
    FIBER = "fiber"
    LEASED = "leased"
    RADIO = "radio"
    UNTYPED = "untyped"

    @classmethod
    def parse(cls, token: str) -> EdgeType:
        """Parse an edge type token, rejecting anything outside the closed set."""
        try:
            return cls(token)
        except ValueError:
            allowed = ", ".join(t.value for t in cls)
            raise ValueError(f"Unknown edge type {token!r} (expected one of: {allowed})") from None


@dataclass(frozen=True)
class Node:
    """A station."""

    id: str
    label: str
    node_type: NodeType


@dataclass(frozen=True)
class Edge:
    """A communication link between two distinct stations."""

    id: str
    source: str
    target: str
    edge_type: EdgeType

    @property
    def pair(self) -> EndpointPair:
        """Endpoints as a sorted tuple (the adjacency key)."""
        return endpoint_pair(self.source, self.target)

    def other(self, node_id: str) -> str:
        """Return the endpoint opposite ``node_id``."""
        if node_id == self.source:
            return self.target
        if node_id == self.target:
            return self.source
        raise UnknownNodeError(f"Node {node_id!r} is not an endpoint of edge {self.id!r}")


def endpoint_pair(a: str, b: str) -> EndpointPair:
    """Normalize an unordered endpoint pair."""
    return (a, b) if a <= b else (b, a)


@dataclass(frozen=True)
class CollapsedView:
    """Simple-graph view of a network: one representative edge per endpoint pair.

    Attributes:
        representatives: endpoint pair -> representative edge id (smallest id)
        multiplicity: endpoint pair -> all original edge ids, sorted
        graph: networkx simple graph over every node of the network; each
            edge carries its representative id as ``edge_id``
    """

    representatives: dict[EndpointPair, str]
    multiplicity: dict[EndpointPair, list[str]]
    graph: nx.Graph = field(repr=False)

    @property
    def edge_count(self) -> int:
        return len(self.representatives)


class Network:
    """In-memory typed undirected multigraph."""

    def __init__(
        self,
        nodes: Iterable[Node] = (),
        edges: Iterable[Edge] = (),
    ) -> None:
        self.nodes: dict[str, Node] = {}
        self.edges: dict[str, Edge] = {}
        self._adjacency: dict[EndpointPair, list[str]] = {}
        self._incident: dict[str, list[str]] = {}
        for node in nodes:
            self.add_node(node)
        for edge in edges:
            self.add_edge(edge)

    def __repr__(self) -> str:
        return f"Network(nodes={self.node_count}, edges={self.edge_count})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Network):
            return NotImplemented
        return self.nodes == other.nodes and self.edges == other.edges

    __hash__ = None  # type: ignore[assignment]

    @property
    def node_count(self) -> int:
        return len(self.nodes)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    # ------------------------------------------------------------------
    # Mutation
    # ------------------------------------------------------------------

    def add_node(self, node: Node) -> None:
        """Add a node. Raises DuplicateIdError if the id is taken."""
        if node.id in self.nodes:
            raise DuplicateIdError(f"Duplicate node id {node.id!r}")
        self.nodes[node.id] = node
        self._incident[node.id] = []

    def add_edge(self, edge: Edge) -> None:
        """Add an edge; parallel edges may coexist with distinct ids."""
        if edge.id in self.edges:
            raise DuplicateIdError(f"Duplicate edge id {edge.id!r}")
        for endpoint in (edge.source, edge.target):
            if endpoint not in self.nodes:
                raise UnknownNodeError(
                    f"Edge {edge.id!r} references missing node {endpoint!r}"
                )
        if edge.source == edge.target:
            raise SelfLoopError(f"Edge {edge.id!r} is a self-loop on {edge.source!r}")

        self.edges[edge.id] = edge
        self._adjacency.setdefault(edge.pair, []).append(edge.id)
        self._incident[edge.source].append(edge.id)
        self._incident[edge.target].append(edge.id)

    def remove_edge(self, edge_id: str) -> Edge:
        """Remove an edge and return it."""
        try:
            edge = self.edges.pop(edge_id)
        except KeyError:
            raise NetworkError(f"Unknown edge id {edge_id!r}") from None

        ids = self._adjacency[edge.pair]
        ids.remove(edge_id)
        if not ids:
            del self._adjacency[edge.pair]
        self._incident[edge.source].remove(edge_id)
        self._incident[edge.target].remove(edge_id)
        return edge

    def remove_node(self, node_id: str) -> list[Edge]:
        """Remove a node with all of its incident edges; return the removed edges."""
        self._require(node_id)
        removed = [self.remove_edge(eid) for eid in sorted(self._incident[node_id])]
        del self.nodes[node_id]
        del self._incident[node_id]
        return removed

    def retype_edges(self, edge_type: EdgeType) -> None:
        """Set every edge to ``edge_type``, keeping ids and endpoints."""
        for edge_id, edge in self.edges.items():
            if edge.edge_type is not edge_type:
                self.edges[edge_id] = replace(edge, edge_type=edge_type)

    def set_edge_type(self, edge_id: str, edge_type: EdgeType) -> None:
        """Change the type of a single edge."""
        try:
            edge = self.edges[edge_id]
        except KeyError:
            raise NetworkError(f"Unknown edge id {edge_id!r}") from None
        self.edges[edge_id] = replace(edge, edge_type=edge_type)

    def copy(self) -> Network:
        """Return an independent copy (nodes and edges are immutable and shared)."""
        return Network(self.iter_nodes(), self.iter_edges())

    # ------------------------------------------------------------------
    # Queries
    # ------------------------------------------------------------------

    def _require(self, node_id: str) -> None:
        if node_id not in self.nodes:
            raise UnknownNodeError(f"Unknown node id {node_id!r}")

    def iter_nodes(self) -> Iterator[Node]:
        """Nodes in ascending id order."""
        for node_id in sorted(self.nodes):
            yield self.nodes[node_id]

    def iter_edges(self) -> Iterator[Edge]:
        """Edges in ascending id order."""
        for edge_id in sorted(self.edges):
            yield self.edges[edge_id]

    def nodes_of_type(self, node_type: NodeType) -> list[str]:
        """Sorted ids of nodes with the given type."""
        return sorted(n.id for n in self.nodes.values() if n.node_type is node_type)

    def neighbors(self, node_id: str) -> set[str]:
        """De-duplicated set of adjacent node ids."""
        self._require(node_id)
        return {self.edges[eid].other(node_id) for eid in self._incident[node_id]}

    def degree(self, node_id: str) -> int:
        """Incident edge count, parallel edges counted individually."""
        self._require(node_id)
        return len(self._incident[node_id])

    def incident_edges(self, node_id: str) -> list[str]:
        """Sorted ids of edges incident to ``node_id``."""
        self._require(node_id)
        return sorted(self._incident[node_id])

    def edges_between(self, a: str, b: str) -> list[str]:
        """Ids of all edges joining ``a`` and ``b`` (empty if not adjacent)."""
        return list(self._adjacency.get(endpoint_pair(a, b), ()))

    def has_adjacency(self, a: str, b: str) -> bool:
        return endpoint_pair(a, b) in self._adjacency

    def connected_components(self) -> list[set[str]]:
        """Maximal connected node sets, ordered by their smallest member id."""
        components = nx.connected_components(self.to_graph())
        return sorted((set(c) for c in components), key=min)

    def is_connected(self) -> bool:
        return len(self.connected_components()) == 1

    def collapse_parallel(self) -> CollapsedView:
        """Build the simple-graph view; the network itself is not changed."""
        multiplicity = {
            pair: sorted(ids) for pair, ids in sorted(self._adjacency.items())
        }
        representatives = {pair: ids[0] for pair, ids in multiplicity.items()}

        graph = nx.Graph()
        graph.add_nodes_from(sorted(self.nodes))
        for (a, b), edge_id in representatives.items():
            graph.add_edge(a, b, edge_id=edge_id)
        return CollapsedView(representatives, multiplicity, graph)

    def to_graph(self) -> nx.Graph:
        """networkx simple graph of this network (parallel edges collapsed)."""
        return self.collapse_parallel().graph

    def subgraph(self, node_ids: Iterable[str]) -> Network:
        """Induced sub-network on ``node_ids`` (edges with both endpoints kept)."""
        keep = set(node_ids)
        for node_id in keep:
            self._require(node_id)
        return Network(
            (n for n in self.iter_nodes() if n.id in keep),
            (e for e in self.iter_edges() if e.source in keep and e.target in keep),
        )

    def check_consistency(self) -> None:
        """Verify the adjacency and incidence indexes against the edge map.

        Raises:
            NetworkError: if any index disagrees with ``edges``
        """
        indexed = [eid for ids in self._adjacency.values() for eid in ids]
        if sorted(indexed) != sorted(self.edges):
            raise NetworkError("Adjacency index does not match the edge map")
        for pair, ids in self._adjacency.items():
            for eid in ids:
                if self.edges[eid].pair != pair:
                    raise NetworkError(f"Edge {eid!r} indexed under wrong pair {pair}")
        if set(self._incident) != set(self.nodes):
            raise NetworkError("Incidence index does not match the node map")
        for node_id, ids in self._incident.items():
            for eid in ids:
                if node_id not in self.edges[eid].pair:
                    raise NetworkError(f"Edge {eid!r} not incident to {node_id!r}")
