"""Tests for the bundled statistics profile."""

import random

import pytest

from gridcomm.metrics import default_control_ids, statistics_profile
from gridcomm.network import (
    DisconnectedNetworkError,
    Edge,
    EdgeType,
    EmptyNetworkError,
    InvalidControlError,
    Network,
    Node,
    NodeType,
)
from gridcomm.simplify import simplify
from tests.utils.data_generators import make_network, random_connected_network


def relabel(network: Network, mapping: dict[str, str]) -> Network:
    """Copy of the network with node ids renamed through mapping."""
    return Network(
        (Node(mapping[n.id], n.label, n.node_type) for n in network.iter_nodes()),
        (
            Edge(e.id, mapping[e.source], mapping[e.target], e.edge_type)
            for e in network.iter_edges()
        ),
    )


class TestStatisticsProfile:
    """Tests for statistics_profile."""

    def test_path_fixture(self, path_network):
        """Every statistic of a-b-c with control a."""
        profile = statistics_profile(path_network, ["a"])
        assert profile.node_count == 3
        assert profile.edge_count == 2
        assert profile.control_ids == ["a"]
        assert profile.plc_fiber_ratio == pytest.approx(1.0)
        assert profile.adl == {
            NodeType.CONTROL_CENTER: pytest.approx(1.0),
            NodeType.TRANSMISSION: pytest.approx(1.5),
        }
        assert profile.psl_histogram.counts == {0: 1, 1: 1, 2: 1}
        assert profile.psl_histogram.mean == pytest.approx(1.0)
        assert profile.aebc == {EdgeType.FIBER: pytest.approx(2.0)}

    def test_controls_default_to_control_centers(self, mixed_network):
        """Without a control list every control_center node is used."""
        profile = statistics_profile(mixed_network)
        assert profile.control_ids == ["cc1", "cc2"]
        assert profile.psl_histogram.counts[0] == 2

    def test_configured_control_type(self, mixed_network, configure):
        """GRIDCOMM_CONTROL_TYPE picks the auto-detected type."""
        configure(GRIDCOMM_CONTROL_TYPE="Generating")
        assert default_control_ids(mixed_network) == ["g1"]
        assert statistics_profile(mixed_network).control_ids == ["g1"]

    def test_unknown_control_type(self, mixed_network, configure):
        """An unknown configured type is a control error, not a crash."""
        configure(GRIDCOMM_CONTROL_TYPE="substation")
        with pytest.raises(InvalidControlError, match="GRIDCOMM_CONTROL_TYPE.*substation"):
            default_control_ids(mixed_network)
        with pytest.raises(InvalidControlError):
            statistics_profile(mixed_network)

    def test_mixed_network_aebc(self, mixed_network):
        """Tree-shaped collapse: EBC of a link is the product of its side sizes."""
        assert statistics_profile(mixed_network).aebc == {
            EdgeType.MICROWAVE: pytest.approx(10.0),
            EdgeType.PLC: pytest.approx(12.0),
            EdgeType.FIBER: pytest.approx(7.0),
            EdgeType.LEASED: pytest.approx(12.0),
            EdgeType.RADIO: pytest.approx(7.0),
        }

    def test_simplified_network(self, mixed_network):
        """Only the untyped column remains and no AEBC is reported."""
        profile = statistics_profile(simplify(mixed_network))
        assert profile.degree_type_matrix.edge_types == [EdgeType.UNTYPED]
        assert profile.plc_fiber_ratio == 0.0
        assert profile.aebc == {}

    def test_deterministic(self, mixed_network):
        """Same network, same profile."""
        assert statistics_profile(mixed_network) == statistics_profile(mixed_network.copy())

    def test_disconnected(self):
        """Islands must be pruned first."""
        network = make_network(
            {"a": "control_center", "b": "office", "c": "office"}, [("e1", "a", "b")]
        )
        with pytest.raises(DisconnectedNetworkError):
            statistics_profile(network)

    def test_no_edges(self):
        """A single station has nothing to measure."""
        with pytest.raises(EmptyNetworkError):
            statistics_profile(make_network({"a": "control_center"}, []))

    def test_empty_network(self):
        """The empty network is rejected."""
        with pytest.raises(EmptyNetworkError):
            statistics_profile(Network())

    def test_no_control_centers(self, star_network):
        """No control_center nodes and no list given."""
        with pytest.raises(InvalidControlError):
            statistics_profile(star_network)


class TestWirelessEbcShare:
    """Tests for StatisticsProfile.wireless_ebc_share."""

    def test_mixed_network(self, mixed_network):
        """Microwave (7+7+16) and radio (7) out of 75 total betweenness."""
        profile = statistics_profile(mixed_network)
        assert profile.wireless_ebc_share == pytest.approx(37 / 75)

    def test_wired_only(self, path_network):
        """No wireless links, no wireless share."""
        assert statistics_profile(path_network, ["a"]).wireless_ebc_share == 0.0

    def test_wireless_only(self, star_network):
        """All betweenness on microwave links."""
        assert statistics_profile(star_network, ["m"]).wireless_ebc_share == pytest.approx(1.0)

    def test_untyped_network(self, mixed_network):
        """Undefined without typed betweenness."""
        assert statistics_profile(simplify(mixed_network)).wireless_ebc_share is None


@pytest.mark.slow
class TestRelabelInvariance:
    """Renaming nodes changes nothing but the control id list."""

    def test_random_relabelling(self):
        """Thirty random networks with shuffled ids."""
        rng = random.Random(8)
        for _ in range(30):
            network = random_connected_network(rng, rng.randint(2, 15), parallel_prob=0.2)
            ids = sorted(network.nodes)
            shuffled = ids[:]
            rng.shuffle(shuffled)
            mapping = {old: f"x{new}" for old, new in zip(ids, shuffled, strict=True)}
            controls = rng.sample(ids, 2) if len(ids) > 2 else ids[:1]

            before = statistics_profile(network, controls)
            after = statistics_profile(relabel(network, mapping), [mapping[c] for c in controls])

            assert after.control_ids == sorted(mapping[c] for c in controls)
            assert after.psl_histogram.counts == before.psl_histogram.counts
            assert after.psl_histogram.skewness == pytest.approx(before.psl_histogram.skewness)
            assert after.adl == pytest.approx(before.adl)
            assert after.plc_fiber_ratio == pytest.approx(before.plc_fiber_ratio)
            assert after.aebc == pytest.approx(before.aebc)
            for node_type, row in before.degree_type_matrix.cells.items():
                assert after.degree_type_matrix.cells[node_type] == pytest.approx(row)
