"""Tests for W-saturating matchings and {P2, P3}-packings."""

import logging
import random
from collections import Counter
from typing import Dict, List, Optional

import networkx as nx
import pytest

from src.decomposition.gallai_edmonds import contract, decompose
from src.errors import ContractViolationError
from src.matching.bipartite import inessential_left_vertices
from src.matching.blossom import is_maximum
from src.models.graph import BipartiteGraph
from src.models.structure import Packing
from src.packing.packings import (
    _claim_step,
    _exchange_measure,
    p2p3_packing,
    refined_packing,
    saturate_W,
    split_packing,
)
from src.packing.orientation import OrientationState

RANDOM_INSTANCES = 1000
FORCED_INSTANCES = 300
FORCED_ATTEMPTS = 30000


def random_bipartite(rng: random.Random) -> BipartiteGraph:
    """Random bipartite multigraph whose maximum matchings all cover the left side."""
    while True:
        left = rng.randint(1, 4)
        right = rng.randint(left, left + 5)
        edges = [
            (i, j, rng.randint(1, 3))
            for i in range(left)
            for j in range(right)
            if rng.random() < 0.45
        ]
        host = BipartiteGraph.build(left, right, edges)
        if any(host.degree(a) == 0 for a in host.left):
            continue
        if not inessential_left_vertices(host):
            return host


def networkx_nu(host: BipartiteGraph) -> int:
    view = host.graph.to_networkx()
    return len(nx.bipartite.hopcroft_karp_matching(view, host.left)) // 2


def degree_classes(host: BipartiteGraph):
    """W = {d >= Delta(A)}; U = {Delta(A) <= 2d < 2 Delta(A)}."""
    delta_a = host.max_degree(host.left)
    W = [b for b in host.right if host.degree(b) >= delta_a]
    U = [b for b in host.right if 2 * host.degree(b) >= delta_a and host.degree(b) < delta_a]
    return delta_a, W, U


def exchange_instance(rng: random.Random) -> BipartiteGraph:
    """Random host where every A vertex has degree exactly Delta(A)."""
    while True:
        left = rng.randint(2, 5)
        right = left + rng.randint(0, 1)
        target = rng.randint(2, 4)
        counts: Counter = Counter()
        for i in range(left):
            for _ in range(target):
                counts[i, rng.randrange(right)] += 1
        host = BipartiteGraph.build(left, right, [(i, j, m) for (i, j), m in counts.items()])
        if not inessential_left_vertices(host):
            return host


def forced_start(
    host: BipartiteGraph, W: List[int], U: List[int], rng: random.Random
) -> Optional[Packing]:
    """A packing covering A, W and U that opens with a P3 on two W vertices."""
    w_set = set(W)
    leaves: Dict[int, List[int]] = {a: [] for a in host.left}
    used = set()
    centers = list(host.left)
    rng.shuffle(centers)
    for a in centers:
        free_w = [b for b in host.neighbors(a) if b in w_set]
        if len(free_w) >= 2:
            pair = rng.sample(free_w, 2)
            leaves[a].extend(pair)
            used.update(pair)
            break
    else:
        return None

    pending = [v for v in W + U if v not in used]
    rng.shuffle(pending)
    for b in pending:
        options = [a for a in host.neighbors(b) if len(leaves[a]) < 2]
        if not options:
            return None
        leaves[rng.choice(options)].append(b)
        used.add(b)

    for a in host.left:
        if leaves[a]:
            continue
        free = [b for b in host.neighbors(a) if b not in used]
        if not free:
            return None
        leaves[a].append(free[0])
        used.add(free[0])

    components = []
    for a, chosen in leaves.items():
        if len(chosen) == 1:
            components.append((a, chosen[0]))
        else:
            components.append((min(chosen), a, max(chosen)))
    return Packing(host=host, components=tuple(components))


@pytest.fixture
def penta5_h(penta5):
    """H of penta5: A = {hub}, q0 the doubled triangle with three edges to the hub."""
    return contract(penta5, decompose(penta5), 5)


class TestSaturateW:
    """Tests for saturate_W."""

    def test_forced_choice(self, star_bipartite):
        """Test W = {b1} forces the edge to b1."""
        assert saturate_W(star_bipartite, [1]).sorted_pairs() == [(0, 1)]

    def test_empty_w(self, star_bipartite):
        """Test an empty W still covers A."""
        assert saturate_W(star_bipartite, []).covers(0)

    def test_hall_failure_without_degree_bound(self, star_bipartite):
        """Test two W vertices on one A vertex is a precondition failure."""
        with pytest.raises(ContractViolationError, match="precondition"):
            saturate_W(star_bipartite, [1, 2])

    def test_w_on_left_side(self, star_bipartite):
        """Test W must lie on the B side."""
        with pytest.raises(ContractViolationError):
            saturate_W(star_bipartite, [0])

    def test_left_side_not_covered(self):
        """Test an inessential A vertex is refused."""
        crowded = BipartiteGraph.build(2, 1, [(0, 0, 1), (1, 0, 1)])
        with pytest.raises(ContractViolationError):
            saturate_W(crowded, [])

    def test_random_instances(self):
        """Test W = {d >= Delta(A)} is saturated by a maximum matching."""
        rng = random.Random(2024)
        for _ in range(RANDOM_INSTANCES):
            host = random_bipartite(rng)
            _, W, _ = degree_classes(host)
            matching = saturate_W(host, W)
            assert all(matching.covers(v) for v in list(host.left) + W)
            assert len(matching) == networkx_nu(host)
            assert is_maximum(host.graph, matching)


class TestP2P3Packing:
    """Tests for p2p3_packing."""

    def test_both_leaves_required(self, star_bipartite):
        """Test W = B on a star gives the single P3."""
        packing = p2p3_packing(star_bipartite, [1, 2])
        assert packing.components == ((1, 0, 2),)

    def test_empty_w_is_a_matching(self, star_bipartite):
        """Test no W yields only P2 components."""
        packing = p2p3_packing(star_bipartite, [])
        assert all(len(component) == 2 for component in packing.components)
        assert 0 in packing.covered()

    def test_penta5_component(self, penta5_h):
        """Test the degree-3 component is covered with the hub."""
        q0 = penta5_h.q(0)
        packing = p2p3_packing(penta5_h, [q0])
        assert {0, q0} <= packing.covered()

    def test_random_instances(self):
        """Test W = {2d >= Delta(A)} and A are covered."""
        rng = random.Random(7)
        for _ in range(RANDOM_INSTANCES):
            host = random_bipartite(rng)
            delta_a = host.max_degree(host.left)
            W = [b for b in host.right if 2 * host.degree(b) >= delta_a]
            packing = p2p3_packing(host, W)
            covered = packing.covered()
            assert all(v in covered for v in list(host.left) + W)
            assert all(packing.s_degree(b) <= 1 for b in host.right)


class TestRefinedPacking:
    """Tests for refined_packing."""

    def test_complete_two_by_two(self):
        """Test two W vertices end up in separate P2s."""
        host = BipartiteGraph.build(2, 2, [(0, 0, 1), (0, 1, 1), (1, 0, 1), (1, 1, 1)])
        packing = refined_packing(host, [2, 3], [])
        assert packing.components == ((0, 2), (1, 3))

    def test_u_is_covered(self, penta5_h):
        """Test the U component is packed with the hub."""
        q0 = penta5_h.q(0)
        packing = refined_packing(penta5_h, [], [q0])
        assert (0, q0) in packing.edges()

    def test_overlapping_classes_rejected(self, star_bipartite):
        """Test W and U must be disjoint."""
        with pytest.raises(ContractViolationError, match="disjoint"):
            refined_packing(star_bipartite, [1], [1])

    def test_random_instances(self):
        """Test A, W and U are covered and no component holds two W vertices."""
        rng = random.Random(11)
        for _ in range(RANDOM_INSTANCES):
            host = random_bipartite(rng)
            _, W, U = degree_classes(host)
            packing = refined_packing(host, W, U)
            covered = packing.covered()
            assert all(v in covered for v in list(host.left) + W + U)
            w_set = set(W)
            for component in packing.components:
                assert sum(v in w_set for v in component) <= 1

            m, m_aux = split_packing(packing, W)
            assert all(m.covers(v) for v in list(host.left) + W)
            assert all(m.covers(u) or m_aux.covers(u) for u in U)
            assert sorted(m.pairs | m_aux.pairs) == sorted(
                (min(a, b), max(a, b)) for a, b in packing.edges()
            )


class TestExchange:
    """Tests for the exchange step on a two-W P3."""

    @pytest.fixture
    def chain(self):
        """A = {0, 1}, B = {2, 3, 4}; edges 0-2, 0-3, 1-3, 1-4."""
        return BipartiteGraph.build(2, 3, [(0, 0, 1), (0, 1, 1), (1, 1, 1), (1, 2, 1)])

    def test_flip_along_path(self, chain):
        """Test the two-W P3 gives up its W leaf to the neighbouring P2."""
        state = OrientationState(chain, [(0, 2), (0, 3), (1, 4)])
        W = frozenset({2, 3})
        assert state.two_w_centers(W) == [0]
        result = _claim_step(state, W, frozenset())
        assert result.edges() == [(0, 2), (1, 3)]
        assert result.two_w_centers(W) == []

    def test_u_endpoint_is_kept(self, chain):
        """Test a U endpoint in a P2 stays covered by a P3."""
        state = OrientationState(chain, [(0, 2), (0, 3), (1, 4)])
        result = _claim_step(state, frozenset({2, 3}), frozenset({4}))
        assert result.edges() == [(0, 2), (1, 3), (1, 4)]

    def test_reach_follows_orientation(self, chain):
        """Test packing edges point to B and the rest point to A."""
        state = OrientationState(chain, [(0, 2), (0, 3), (1, 4)])
        parent = state.reach(0)
        assert list(parent) == [0, 2, 3, 1, 4]
        assert state.path_to(parent, 4) == [0, 3, 1, 4]


class TestRefinedExchanges:
    """Tests for refined_packing started from a packing with a two-W P3."""

    @pytest.fixture
    def u_sink_host(self):
        """A = {0, 1, 2}, B = {3..6}; edges 0-3, 0-4, 1-4, 1-5, 2-3, 2-6."""
        return BipartiteGraph.build(
            3, 4, [(0, 0, 1), (0, 1, 1), (1, 1, 1), (1, 2, 1), (2, 0, 1), (2, 3, 1)]
        )

    @pytest.fixture
    def segment_host(self):
        """A = {0, 1, 2}, B = {3..7}; the exchange path crosses a one-W P3 at 1."""
        return BipartiteGraph.build(
            3,
            5,
            [(0, 0, 1), (0, 1, 1), (1, 0, 1), (1, 2, 1), (1, 3, 1), (2, 2, 1), (2, 4, 1)],
        )

    def test_u_sink_stays_covered(self, u_sink_host, caplog):
        """Test the exchange stops short of a U sink held in a P2."""
        start = Packing(host=u_sink_host, components=((3, 0, 4), (1, 5), (2, 6)))
        W, U = frozenset({3, 4}), frozenset({5, 6})
        assert _exchange_measure(OrientationState.from_packing(start), W, U) == (1, 0, 4)

        packing = refined_packing(u_sink_host, W, U, start=start)
        assert packing.components == ((0, 4), (1, 5), (3, 2, 6))
        assert _exchange_measure(OrientationState.from_packing(packing), W, U) == (0, 1, 0)
        assert "precondition" not in caplog.text

    def test_segment_through_w_leaf(self, segment_host, caplog):
        """Test a path through a one-W P3 flips only from that P3 onward."""
        caplog.set_level(logging.DEBUG, logger="src.packing.packings")
        start = Packing(host=segment_host, components=((3, 0, 4), (5, 1, 6), (2, 7)))
        W, U = frozenset({3, 4, 5}), frozenset({6})
        assert _exchange_measure(OrientationState.from_packing(start), W, U) == (1, 1, 6)

        packing = refined_packing(segment_host, W, U, start=start)
        assert packing.components == ((0, 4), (3, 1, 6), (2, 5))
        assert "(segment through w)" in caplog.text
        assert "after 2 exchanges" in caplog.text
        assert "degree precondition" in caplog.text

    def test_each_exchange_lowers_the_measure(self, segment_host):
        """Test the intermediate state sits strictly between start and result."""
        W, U = frozenset({3, 4, 5}), frozenset({6})
        state = OrientationState(segment_host, [(0, 3), (0, 4), (1, 5), (1, 6), (2, 7)])
        middle = OrientationState(segment_host, [(0, 3), (0, 4), (1, 6), (2, 5)])
        end = OrientationState(segment_host, [(0, 4), (1, 3), (1, 6), (2, 5)])
        measures = [_exchange_measure(s, W, U) for s in (state, middle, end)]
        assert measures == [(1, 1, 6), (1, 0, 4), (0, 1, 0)]
        assert measures == sorted(measures, reverse=True)

    def test_start_must_cover(self, u_sink_host):
        """Test a start packing that leaves A or U bare is refused."""
        start = Packing(host=u_sink_host, components=((3, 0, 4), (1, 5)))
        with pytest.raises(ContractViolationError, match="misses"):
            refined_packing(u_sink_host, [3, 4], [5, 6], start=start)

    def test_start_on_another_host(self, u_sink_host, star_bipartite):
        """Test a start packing must live on the same host."""
        start = Packing(host=star_bipartite, components=((1, 0, 2),))
        with pytest.raises(ContractViolationError, match="another host"):
            refined_packing(u_sink_host, [3, 4], [5, 6], start=start)

    def test_forced_random_instances(self):
        """Test two-W P3 starts on random hosts are exchanged away."""
        rng = random.Random(99)
        done = 0
        for _ in range(FORCED_ATTEMPTS):
            if done == FORCED_INSTANCES:
                break
            host = exchange_instance(rng)
            _, W, U = degree_classes(host)
            start = forced_start(host, W, U, rng)
            if start is None:
                continue
            w_set = frozenset(W)
            assert OrientationState.from_packing(start).two_w_centers(w_set)

            packing = refined_packing(host, W, U, start=start)
            assert not OrientationState.from_packing(packing).two_w_centers(w_set)
            covered = packing.covered()
            assert all(v in covered for v in list(host.left) + W + U)
            m, m_aux = split_packing(packing, W)
            assert all(m.covers(v) for v in list(host.left) + W)
            assert all(m.covers(u) or m_aux.covers(u) for u in U)
            done += 1
        assert done == FORCED_INSTANCES


class TestSplitPacking:
    """Tests for split_packing."""

    def test_w_leaf_goes_to_m(self, star_bipartite):
        """Test the W leaf of a P3 is matched in M."""
        packing = Packing(host=star_bipartite, components=((1, 0, 2),))
        m, m_aux = split_packing(packing, [2])
        assert m.sorted_pairs() == [(0, 2)]
        assert m_aux.sorted_pairs() == [(0, 1)]

    def test_lower_leaf_without_w(self, star_bipartite):
        """Test the lower B id goes to M when no leaf is in W."""
        packing = Packing(host=star_bipartite, components=((1, 0, 2),))
        m, m_aux = split_packing(packing, [])
        assert m.sorted_pairs() == [(0, 1)]
        assert m_aux.sorted_pairs() == [(0, 2)]

    def test_two_w_leaves_rejected(self, star_bipartite):
        """Test a P3 with both leaves in W cannot be split."""
        packing = Packing(host=star_bipartite, components=((1, 0, 2),))
        with pytest.raises(ContractViolationError, match="both ends"):
            split_packing(packing, [1, 2])
