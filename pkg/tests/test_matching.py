"""Tests for blossom and bipartite matching."""

import networkx as nx
import pytest

from src.errors import ContractViolationError, FactorCriticalityError
from src.matching.bipartite import (
    bipartite_max_matching,
    hall_violator,
    hopcroft_karp,
    inessential_left_vertices,
)
from src.matching.blossom import (
    is_maximum,
    matching_number,
    maximum_matching,
    near_perfect_avoiding,
    perfect_matching,
)
from src.models.graph import BipartiteGraph, Matching, Multigraph


def _networkx_nu(graph: Multigraph) -> int:
    return len(nx.max_weight_matching(graph.to_networkx(), maxcardinality=True))


class TestBlossom:
    """Tests for the blossom matcher."""

    @pytest.mark.parametrize("seed", range(40))
    def test_agrees_with_networkx(self, seed):
        """Test nu on random graphs matches networkx."""
        graph = Multigraph.from_networkx(nx.gnp_random_graph(11, 0.3, seed=seed))
        matching = maximum_matching(graph)
        assert len(matching) == _networkx_nu(graph)
        assert is_maximum(graph, matching)

    def test_odd_cycle(self, c5):
        """Test a blossom is handled."""
        assert matching_number(c5) == 2

    def test_petersen_is_perfect(self, petersen):
        """Test the Petersen graph has a perfect matching."""
        assert len(maximum_matching(petersen)) == 5

    def test_multiplicity_ignored(self, dtri):
        """Test parallel edges do not change nu."""
        assert matching_number(dtri) == 1

    def test_induced_subgraph(self, k4):
        """Test restriction to a vertex subset."""
        matching = maximum_matching(k4, vertices=[0, 1, 2])
        assert len(matching) == 1
        assert set(matching.saturated()) <= {0, 1, 2}

    def test_initial_matching_stays_covered(self, c5):
        """Test growing from a seed keeps its vertices saturated."""
        seed = Matching.of(c5, [(1, 2)])
        grown = maximum_matching(c5, initial=seed)
        assert len(grown) == 2
        assert grown.covers(1) and grown.covers(2)

    def test_non_maximum_detected(self, c5):
        """Test a single edge of C6 is not maximum."""
        c6 = Multigraph.from_networkx(nx.cycle_graph(6))
        assert not is_maximum(c6, Matching.of(c6, [(0, 1)]))
        assert is_maximum(c5, Matching.of(c5, [(0, 1), (2, 3)]))

    def test_foreign_matching_rejected(self, c5, k4):
        """Test Berge check refuses a matching of another graph."""
        with pytest.raises(ContractViolationError):
            is_maximum(c5, Matching.of(k4, [(0, 2)]))


class TestPerfectMatchings:
    """Tests for perfect and near-perfect matchings."""

    def test_perfect_matching_of_k4(self, k4):
        """Test K4 has a perfect matching."""
        assert len(perfect_matching(k4)) == 2

    def test_odd_order_has_none(self, c5):
        """Test odd vertex sets have no perfect matching."""
        assert perfect_matching(c5) is None

    def test_near_perfect_avoiding(self, c5):
        """Test C5 minus a vertex is matched perfectly."""
        matching = near_perfect_avoiding(c5, 0)
        assert matching.unsaturated() == (0,)

    def test_not_factor_critical(self, path3):
        """Test P3 minus its middle has no perfect matching."""
        with pytest.raises(FactorCriticalityError) as exc_info:
            near_perfect_avoiding(path3, 1)
        assert exc_info.value.witness["avoid"] == 1

    def test_avoid_outside_component(self, c5):
        """Test the avoided vertex must lie in the component."""
        with pytest.raises(ContractViolationError):
            near_perfect_avoiding(c5, 4, within=[0, 1, 2])


class TestHopcroftKarp:
    """Tests for bipartite matching."""

    def test_augments_through_conflict(self):
        """Test an augmenting path reroutes the first choice."""
        matched = hopcroft_karp({0: [10, 11], 1: [10]})
        assert matched == {0: 11, 1: 10}

    def test_initial_left_vertices_stay_matched(self):
        """Test a starting matching is only ever augmented."""
        matched = hopcroft_karp({0: [10, 11], 1: [10], 2: [11]}, initial={0: 10})
        assert 0 in matched
        assert len(matched) == 2

    @pytest.mark.parametrize("seed", range(20))
    def test_agrees_with_networkx(self, seed):
        """Test nu on random bipartite graphs matches networkx."""
        view = nx.bipartite.gnmk_random_graph(6, 7, 14, seed=seed)
        edges = [(u, v - 6, 1) for u, v in view.edges() if u < 6]
        bipartite = BipartiteGraph.build(6, 7, edges)
        expected = len(
            nx.bipartite.hopcroft_karp_matching(bipartite.graph.to_networkx(), bipartite.left)
        ) // 2
        assert len(bipartite_max_matching(bipartite)) == expected

    def test_hall_violator(self):
        """Test three left vertices sharing one neighbor."""
        bipartite = BipartiteGraph.build(3, 1, [(0, 0, 1), (1, 0, 1), (2, 0, 1)])
        assert hall_violator(bipartite, bipartite.left, {0: 3}) == ((0, 1, 2), (3,))

    def test_inessential_left_vertices(self, star_bipartite):
        """Test essential and inessential left vertices."""
        assert inessential_left_vertices(star_bipartite) == []
        crowded = BipartiteGraph.build(2, 1, [(0, 0, 1), (1, 0, 1)])
        assert inessential_left_vertices(crowded) == [0, 1]
