"""Microwave-collapse simplification.

Each microwave station is removed in turn (ascending id, re-evaluated after
every removal). Before a station with two or more distinct neighbors is
removed, its neighbors are circularly linked in ascending id order so they
stay mutually reachable. A station with at most one neighbor is simply
dropped. The result carries no link media: every edge is ``untyped``.
"""

from __future__ import annotations

import itertools
from collections.abc import Iterator, Sequence

from . import log
from .network import Edge, EdgeType, Network, NodeType

CREATED_EDGE_PREFIX = "simpl_"


class EdgeIdSequence:
    """Deterministic ids for created edges: simpl_1, simpl_2, ...

    Ids already present in the target network are skipped.
    """

    def __init__(self, prefix: str = CREATED_EDGE_PREFIX) -> None:
        self.prefix = prefix
        self._counter = itertools.count(1)

    def next_id(self, network: Network) -> str:
        while True:
            candidate = f"{self.prefix}{next(self._counter)}"
            if candidate not in network.edges:
                return candidate


def _cycle_pairs(ordered: Sequence[str]) -> Iterator[tuple[str, str]]:
    k = len(ordered)
    if k < 2:
        return
    if k == 2:
        yield ordered[0], ordered[1]
        return
    for i in range(k):
        yield ordered[i], ordered[(i + 1) % k]


def circular_link(
    network: Network,
    node_ids: Sequence[str],
    id_sequence: EdgeIdSequence | None = None,
) -> list[Edge]:
    """Link ``node_ids`` into a cycle (sorted by id), in place.

    k <= 1 adds nothing; k == 2 adds a single edge; k >= 3 adds the cycle
    n1-n2, ..., nk-n1. A link is skipped when the two nodes are already
    adjacent. Created edges are ``untyped``.

    Returns:
        The edges that were created, in creation order.

    Raises:
        UnknownNodeError: if an id is not in the network
        ValueError: if the list contains duplicates
    """
    if len(set(node_ids)) != len(node_ids):
        raise ValueError(f"circular_link expects distinct node ids, got {list(node_ids)}")
    for node_id in node_ids:
        network.neighbors(node_id)  # raises UnknownNodeError

    ids = id_sequence or EdgeIdSequence()
    created: list[Edge] = []
    for a, b in _cycle_pairs(sorted(node_ids)):
        if network.has_adjacency(a, b):
            continue
        edge = Edge(ids.next_id(network), a, b, EdgeType.UNTYPED)
        network.add_edge(edge)
        created.append(edge)
    return created


def simplify(network: Network) -> Network:
    """Return the simplified inter-substation connectivity model.

    The input network is not mutated.
    """
    result = network.copy()
    result.retype_edges(EdgeType.UNTYPED)
    ids = EdgeIdSequence()

    removed = 0
    created = 0
    while True:
        microwave = result.nodes_of_type(NodeType.MICROWAVE)
        if not microwave:
            break
        station = microwave[0]
        neighbors = sorted(result.neighbors(station))
        if len(neighbors) >= 2:
            created += len(circular_link(result, neighbors, ids))
        result.remove_node(station)
        removed += 1
        log.debug(f"Removed microwave station {station} ({len(neighbors)} neighbors)")

    log.debug(
        f"Simplified: removed {removed} microwave stations, created {created} links; "
        f"{result.node_count} nodes, {result.edge_count} edges remain"
    )
    return result
