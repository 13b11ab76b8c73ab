"""Primary routing paths: each station's shortest route to a control center."""

from __future__ import annotations

import csv
import io
from collections.abc import Iterable, Mapping
from dataclasses import dataclass

import networkx as nx

from .metrics import require_connected, validate_controls
from .network import Network

ROUTES_HEADER = ["node_id", "control_id", "length", "path"]
PATH_SEPARATOR = ">"


@dataclass(frozen=True)
class PrimaryRoute:
    """Shortest route from a node (first) to its primary control center (last)."""

    control_id: str
    path: tuple[str, ...]

    @property
    def length(self) -> int:
        return len(self.path) - 1


def _smallest_path(graph: nx.Graph, source: str, distance: Mapping[str, int]) -> tuple[str, ...]:
    """Lexicographically smallest shortest path from source down to distance 0.

    Every neighbour one hop closer lies on some shortest path, so taking the
    smallest such id at each step yields the smallest node sequence.
    """
    path = [source]
    node = source
    while distance[node] > 0:
        node = min(n for n in graph.neighbors(node) if distance[n] == distance[node] - 1)
        path.append(node)
    return tuple(path)


def primary_routes(network: Network, control_ids: Iterable[str]) -> dict[str, PrimaryRoute]:
    """Pick, for every node, the shortest uniform-weight route to any control center.

    Ties between control centers go to the smallest control id; ties between
    equal-length paths go to the smallest node-id sequence.

    Raises:
        DisconnectedNetworkError: if the network is not connected
        InvalidControlError: if the control list is empty or invalid
    """
    controls = validate_controls(network, control_ids)
    graph = require_connected(network)

    distances = {c: nx.single_source_shortest_path_length(graph, c) for c in controls}

    routes: dict[str, PrimaryRoute] = {}
    for node_id in sorted(network.nodes):
        # controls are sorted, so min() keeps the smallest id on ties
        control = min(controls, key=lambda c: distances[c][node_id])
        routes[node_id] = PrimaryRoute(control, _smallest_path(graph, node_id, distances[control]))
    return routes


def routes_to_csv(routes: Mapping[str, PrimaryRoute]) -> str:
    """Render routes as ``node_id,control_id,length,path`` CSV."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(ROUTES_HEADER)
    for node_id in sorted(routes):
        route = routes[node_id]
        writer.writerow([node_id, route.control_id, route.length, PATH_SEPARATOR.join(route.path)])
    return buf.getvalue()
