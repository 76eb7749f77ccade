"""Tests for the brute-force oracle and the scan harness."""

import networkx as nx
import pytest

from src.errors import BudgetExceededError, ContractViolationError, InputError
from src.models.graph import Multigraph
from src.models.report import RunConfig
from src.oracle.brute_force import (
    enumerate_maximum_matchings,
    exists_good_maximum_matching,
    oracle_matching_number,
)
from src.oracle.scan import exhaustive_regular_scan, random_scan, scan_graph


class TestBruteForce:
    """Tests for exhaustive maximum matching enumeration."""

    @pytest.mark.parametrize(
        "graph,nu,count",
        [
            (nx.complete_graph(2), 1, 1),
            (nx.cycle_graph(3), 1, 3),
            (nx.cycle_graph(5), 2, 5),
            (nx.complete_graph(4), 2, 3),
            (nx.cycle_graph(6), 3, 2),
        ],
    )
    def test_counts(self, graph, nu, count):
        """Test nu and the number of maximum matchings on small graphs."""
        graph = Multigraph.from_networkx(graph)
        assert oracle_matching_number(graph) == nu
        matchings = enumerate_maximum_matchings(graph)
        assert len(matchings) == count
        assert all(len(m) == nu for m in matchings)

    def test_parallel_edges_collapse(self, dtri):
        """Test a doubled triangle has three maximum matchings."""
        verdict = exists_good_maximum_matching(dtri)
        assert verdict.maximum_matching_count == 3
        assert verdict.good_exists

    def test_no_good_matching(self):
        """Test every maximum matching of a claw bares two leaves."""
        claw = Multigraph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
        verdict = exists_good_maximum_matching(claw)
        assert verdict.nu == 1
        assert not verdict.good_exists
        assert verdict.witness is None

    def test_qt4_has_good_matching(self, qt4):
        """Test the oracle agrees with the construction on qt4."""
        verdict = exists_good_maximum_matching(qt4)
        assert verdict.nu == 6
        assert verdict.good_exists
        assert len(verdict.witness.unsaturated()) == 2

    def test_budget(self, petersen):
        """Test graphs over the edge budget are refused."""
        with pytest.raises(BudgetExceededError) as exc_info:
            oracle_matching_number(petersen, edge_budget=10)
        assert exc_info.value.witness == {"edges": 15, "budget": 10}

    @pytest.mark.parametrize("seed", range(20))
    def test_agrees_with_networkx(self, seed):
        """Test oracle nu against networkx on random graphs."""
        view = nx.gnm_random_graph(9, 14, seed=seed)
        expected = len(nx.max_weight_matching(view, maxcardinality=True))
        assert oracle_matching_number(Multigraph.from_networkx(view)) == expected


class TestScan:
    """Tests for exhaustive and random scans."""

    def test_scan_graph_record(self, qt4):
        """Test one record carries both verdicts."""
        record = scan_graph(0, qt4, RunConfig())
        assert record.nu == record.oracle_nu == 6
        assert record.good_exists
        assert record.regime == "multi-4"
        assert record.agreement

    def test_scan_graph_over_budget(self, petersen):
        """Test the oracle is skipped over budget."""
        record = scan_graph(3, petersen, RunConfig(enumeration_edge_budget=5))
        assert record.oracle_nu is None
        assert record.good_exists is None
        assert record.construct_property

    def test_unsupported_graph_is_not_a_discrepancy(self, tripled_triangles):
        """Test unsupported regimes are recorded without a discrepancy."""
        record = scan_graph(0, tripled_triangles, RunConfig())
        assert record.regime == "unsupported"
        assert record.agreement

    def test_exhaustive_cubic(self):
        """Test every simple cubic graph up to eight vertices."""
        records, summary = exhaustive_regular_scan(8, 3)
        assert summary.total == len(records) == 1 + 2 + 6
        assert summary.discrepancy_count == 0
        assert [r.index for r in records] == list(range(summary.total))

    @pytest.mark.slow
    def test_exhaustive_cubic_to_ten(self):
        """Test every simple cubic graph up to ten vertices."""
        records, summary = exhaustive_regular_scan(10, 3)
        assert summary.total == 1 + 2 + 6 + 21
        assert summary.discrepancy_count == 0
        assert all(record.agreement for record in records)

    @pytest.mark.slow
    def test_exhaustive_four_regular_multigraphs(self):
        """Test every 4-regular multigraph up to eight vertices."""
        _, summary = exhaustive_regular_scan(8, 4, simple=False)
        assert summary.total > 0
        assert summary.discrepancy_count == 0

    @pytest.mark.slow
    def test_exhaustive_five_regular_multigraphs(self):
        """Test every 5-regular multigraph up to eight vertices."""
        _, summary = exhaustive_regular_scan(8, 5, simple=False)
        assert summary.total > 0
        assert summary.discrepancy_count == 0

    def test_exhaustive_limit(self):
        """Test exhaustive scans stop at ten vertices."""
        with pytest.raises(ContractViolationError):
            exhaustive_regular_scan(12, 3)

    def test_random_scan_is_deterministic(self):
        """Test the same seed scans the same graphs."""
        first, summary = random_scan(6, 10, 3, seed=3)
        second, _ = random_scan(6, 10, 3, seed=3)
        assert [r.mel for r in first] == [r.mel for r in second]
        assert summary.mode == "random"
        assert summary.discrepancy_count == 0
        assert sum(summary.regimes.values()) == 6

    def test_random_barrier_scan(self):
        """Test barrier draws all have deficiency at least two and scan cleanly."""
        records, summary = random_scan(8, None, 4, simple=False, seed=6, hubs=2)
        assert summary.total == 8
        assert summary.n_max == max(record.n for record in records)
        assert summary.discrepancy_count == 0
        assert all(record.n - 2 * record.nu >= 2 for record in records)

    def test_random_scan_needs_an_order_bound(self):
        """Test a random scan without n_max or hubs is refused."""
        with pytest.raises(InputError):
            random_scan(3, None, 3)

    def test_contract_violation_is_recorded(self, monkeypatch):
        """Test a contract failure on one graph becomes a discrepancy, not an abort."""

        def refuse(graph, config):
            raise ContractViolationError("plan does not fit the graph")

        monkeypatch.setattr("src.oracle.scan.construct", refuse)
        records, summary = random_scan(2, 6, 3, seed=1)
        assert summary.total == 2
        assert summary.regimes == {"error": 2}
        assert all(
            record.discrepancies == ["contract violation: plan does not fit the graph"]
            for record in records
        )

    def test_workers_keep_order(self):
        """Test a joblib fan-out returns the same records in input order."""
        serial, _ = random_scan(4, 8, 3, seed=2)
        parallel, _ = random_scan(4, 8, 3, seed=2, config=RunConfig(scan_workers=2))
        assert [r.mel for r in parallel] == [r.mel for r in serial]
        assert [r.index for r in parallel] == [0, 1, 2, 3]
