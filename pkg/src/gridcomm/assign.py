"""Assign link media to untyped links from a reference AEBC profile.

Wireless media carry far more shortest paths than wired ones, so a link's
betweenness hints at its medium. Both sides are made scale-free by dividing
by the mean betweenness of their own network before matching.
"""

from __future__ import annotations

from . import log
from .metrics import StatisticsProfile, edge_betweenness
from .network import EdgeType, EmptyNetworkError, Network


class ReferenceProfileError(ValueError):
    """The reference profile cannot guide type assignment."""


def reference_ratios(reference: StatisticsProfile) -> dict[EdgeType, float]:
    """Typed AEBC of the reference divided by its edge-weighted mean.

    Raises:
        ReferenceProfileError: if the reference carries no typed AEBC entry
    """
    matrix = reference.degree_type_matrix
    typed = {
        t: v
        for t, v in reference.aebc.items()
        if t is not EdgeType.UNTYPED and matrix.column_total(t) > 0
    }
    if not typed:
        raise ReferenceProfileError("Reference profile has no typed AEBC entries")

    share = {t: matrix.column_total(t) for t in typed}
    mean = sum(typed[t] * share[t] for t in typed) / sum(share.values())
    if mean == 0:
        return {t: 0.0 for t in typed}
    return {t: v / mean for t, v in typed.items()}


def nearest_type(ratio: float, ratios: dict[EdgeType, float]) -> EdgeType:
    """Type whose reference ratio is closest; ties go to declaration order."""
    ordered = [t for t in EdgeType if t in ratios]
    return min(ordered, key=lambda t: abs(ratios[t] - ratio))


def assign_edge_types(
    network: Network, reference: StatisticsProfile
) -> tuple[Network, dict[str, EdgeType]]:
    """Type every untyped link of ``network`` after the reference profile.

    Returns:
        (typed copy of the network, edge id -> assigned type for changed links)

    Raises:
        EmptyNetworkError: if the network has no edges
        ReferenceProfileError: if the reference has no typed AEBC entries
    """
    if network.edge_count == 0:
        raise EmptyNetworkError("Edge type assignment requires at least one edge")
    ratios = reference_ratios(reference)

    ebc = edge_betweenness(network)
    mean = sum(ebc.values()) / len(ebc)

    result = network.copy()
    assigned: dict[str, EdgeType] = {}
    for edge in network.iter_edges():
        if edge.edge_type is not EdgeType.UNTYPED:
            continue
        ratio = ebc[edge.id] / mean if mean > 0 else 0.0
        assigned[edge.id] = nearest_type(ratio, ratios)
        result.set_edge_type(edge.id, assigned[edge.id])

    log.debug(f"Assigned types to {len(assigned)} of {network.edge_count} links")
    return result, assigned
