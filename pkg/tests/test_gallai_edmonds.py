"""Tests for the Gallai-Edmonds decomposition and contraction."""

import networkx as nx
import pytest

from src.decomposition.gallai_edmonds import (
    certify_factor_critical,
    contract,
    decompose,
    good_vertices,
)
from src.errors import ContractViolationError
from src.matching.blossom import matching_number
from src.models.graph import Multigraph


class TestDecompose:
    """Tests for decompose."""

    def test_perfect_matching_graph(self, k4):
        """Test a graph with a perfect matching is all C."""
        ge = decompose(k4)
        assert (ge.D, ge.A, ge.C) == ((), (), (0, 1, 2, 3))
        assert ge.deficiency == 0

    def test_path(self, path3):
        """Test the ends of P3 form D and the middle forms A."""
        ge = decompose(path3)
        assert (ge.D, ge.A, ge.C) == ((0, 2), (1,), ())
        assert ge.components == ((0,), (2,))
        assert ge.edge_counts == (1, 1)

    def test_factor_critical_graph(self, dtri):
        """Test a factor-critical graph is one component."""
        ge = decompose(dtri)
        assert ge.components == ((0, 1, 2),)
        assert ge.A == ()
        assert ge.deficiency == 1

    def test_qt4(self, qt4):
        """Test hubs form A and gadgets form the components."""
        ge = decompose(qt4)
        assert ge.A == (0, 1)
        assert ge.nu == 6
        assert ge.components == ((2, 3, 4), (5, 6, 7), (8, 9, 10), (11, 12, 13))
        assert ge.edge_counts == (2, 2, 2, 2)
        assert ge.deficiency == 2

    def test_components_ordered_by_edges_to_a(self, penta5):
        """Test non-increasing |[Q, A]| ordering."""
        ge = decompose(penta5)
        assert ge.A == (0,)
        assert ge.components[0] == (1, 2, 3)
        assert ge.edge_counts == (3, 1, 1)
        assert ge.component_index(9) == 2
        assert ge.component_index(0) is None

    @pytest.mark.parametrize("seed", range(25))
    def test_d_is_missable_vertices(self, seed):
        """Test D is exactly the set of vertices some maximum matching misses."""
        graph = Multigraph.from_networkx(nx.gnp_random_graph(10, 0.25, seed=seed))
        ge = decompose(graph)
        nu = matching_number(graph)
        assert ge.nu == nu
        for v in range(graph.n):
            rest = [w for w in range(graph.n) if w != v]
            assert (v in ge.D) == (matching_number(graph, rest) == nu)
        assert ge.component_count - len(ge.A) == ge.deficiency


class TestFactorCritical:
    """Tests for factor-critical certificates and good vertices."""

    def test_certify(self, c5, path3, k4):
        """Test odd cycles are factor-critical and paths or even graphs are not."""
        assert certify_factor_critical(c5)
        assert not certify_factor_critical(path3)
        assert not certify_factor_critical(k4)

    def test_certify_within(self, qt4):
        """Test certification of an induced gadget."""
        assert certify_factor_critical(qt4, within=(2, 3, 4))

    def test_good_vertices(self, qt4):
        """Test only the gadget vertex away from the hubs is good."""
        assert good_vertices(qt4, (2, 3, 4)) == (2,)


class TestContract:
    """Tests for the contracted bipartite graph H."""

    def test_qt4(self, qt4):
        """Test every component becomes a degree-2 vertex of H."""
        h = contract(qt4, decompose(qt4), 4)
        assert h.left == (0, 1)
        assert h.right == (2, 3, 4, 5)
        assert [h.degree(q) for q in h.right] == [2, 2, 2, 2]
        assert h.graph.multiplicity(0, h.q(0)) == 2
        assert h.W == ()
        assert h.threshold == 0

    def test_penta5_classes(self, penta5):
        """Test the degree-3 component is recorded in U for k = 5."""
        h = contract(penta5, decompose(penta5), 5)
        assert h.U == (h.q(0),)
        assert h.W == ()
        assert h.original(0) == 0
        assert h.component_index(h.q(2)) == 2

    def test_wrong_degree_rejected(self, qt4):
        """Test the regularity argument must match."""
        with pytest.raises(ContractViolationError):
            contract(qt4, decompose(qt4), 5)
