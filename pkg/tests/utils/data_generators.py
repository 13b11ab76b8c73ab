"""Utilities for generating test networks."""

import random

from gridcomm.network import Edge, EdgeType, Network, Node, NodeType

TYPED_EDGES = [t for t in EdgeType if t is not EdgeType.UNTYPED]
NON_MICROWAVE_NODES = [t for t in NodeType if t is not NodeType.MICROWAVE]
LABELS = ["Station", "Sub, North", 'Plant "A"', "Office 7", "Relay"]


def make_network(
    nodes: dict[str, NodeType | str],
    edges: list[tuple],
) -> Network:
    """Build a network from compact literals.

    Args:
        nodes: id -> node type
        edges: (id, source, target[, edge type]); edge type defaults to fiber

    Returns:
        Network with labels set to the upper-cased ids
    """
    network = Network()
    for node_id, node_type in nodes.items():
        network.add_node(Node(node_id, node_id.upper(), NodeType(node_type)))
    for spec in edges:
        edge_id, source, target = spec[:3]
        edge_type = EdgeType(spec[3]) if len(spec) == 4 else EdgeType.FIBER
        network.add_edge(Edge(edge_id, source, target, edge_type))
    return network


def random_connected_network(
    rng: random.Random,
    n_nodes: int,
    extra_edges: int | None = None,
    microwave_share: float | None = None,
    parallel_prob: float = 0.1,
    edge_types: list[EdgeType] | None = None,
) -> Network:
    """Generate a random connected network.

    A random spanning tree guarantees connectivity; extra random links
    (some of them parallel) are added on top.

    Args:
        rng: Seeded random source
        n_nodes: Number of nodes (>= 1)
        extra_edges: Links added beyond the spanning tree (default: random)
        microwave_share: Exact share of microwave nodes; None for random types
        parallel_prob: Chance that an extra link duplicates an existing pair
        edge_types: Edge types to draw from (default: all typed media)
    """
    ids = [f"n{i:02d}" for i in range(n_nodes)]
    if microwave_share is None:
        node_types = [rng.choice(list(NodeType)) for _ in ids]
    else:
        n_micro = round(n_nodes * microwave_share)
        node_types = [NodeType.MICROWAVE] * n_micro + [
            rng.choice(NON_MICROWAVE_NODES) for _ in range(n_nodes - n_micro)
        ]
        rng.shuffle(node_types)

    network = Network()
    for node_id, node_type in zip(ids, node_types, strict=True):
        network.add_node(Node(node_id, rng.choice(LABELS), node_type))

    media = edge_types or TYPED_EDGES
    counter = 0

    def add(a: str, b: str) -> None:
        nonlocal counter
        counter += 1
        network.add_edge(Edge(f"e{counter:03d}", a, b, rng.choice(media)))

    for i in range(1, n_nodes):
        add(ids[i], ids[rng.randrange(i)])

    if extra_edges is None:
        extra_edges = rng.randint(0, n_nodes)
    for _ in range(extra_edges if n_nodes > 1 else 0):
        existing = [e for e in network.edges.values()]
        if existing and rng.random() < parallel_prob:
            edge = rng.choice(existing)
            add(edge.source, edge.target)
        else:
            a, b = rng.sample(ids, 2)
            add(a, b)
    return network


def random_network(rng: random.Random, n_nodes: int, n_edges: int) -> Network:
    """Random network that may be disconnected (for format round-trips)."""
    ids = [f"node-{i}.{rng.randint(0, 9)}" for i in range(n_nodes)]
    network = Network()
    for node_id in ids:
        network.add_node(Node(node_id, rng.choice(LABELS), rng.choice(list(NodeType))))
    if n_nodes < 2:
        return network
    for i in range(n_edges):
        a, b = rng.sample(ids, 2)
        network.add_edge(Edge(f"link_{i}", a, b, rng.choice(list(EdgeType))))
    return network
