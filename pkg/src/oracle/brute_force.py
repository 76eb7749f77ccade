"""Exhaustive maximum-matching enumeration for small graphs.

Nothing here uses the blossom engine: nu is found by searching matchings with
an increasing number of unsaturated vertices, so the result is an independent
reference for the constructive code.
"""

import logging
from typing import Iterator, List, Optional, Tuple

from ..errors import BudgetExceededError
from ..models.graph import Matching, Multigraph
from ..models.report import OracleVerdict

logger = logging.getLogger(__name__)

DEFAULT_EDGE_BUDGET = 24

Pairs = List[Tuple[int, int]]


def _check_budget(graph: Multigraph, edge_budget: int) -> None:
    if graph.support_edge_count > edge_budget:
        raise BudgetExceededError(
            f"graph has {graph.support_edge_count} distinct edges; "
            f"the enumeration budget is {edge_budget}",
            {"edges": graph.support_edge_count, "budget": edge_budget},
        )


def _matchings_missing_at_most(graph: Multigraph, budget: int) -> Iterator[Pairs]:
    """Matchings leaving at most ``budget`` vertices unsaturated.

    The lowest undecided vertex is either matched to a later free neighbor or
    skipped, so each matching is produced once, in a fixed order.
    """
    decided = [False] * graph.n
    pairs: Pairs = []

    def search(v: int, skipped: int) -> Iterator[Pairs]:
        while v < graph.n and decided[v]:
            v += 1
        if v == graph.n:
            yield list(pairs)
            return
        decided[v] = True
        for w in graph.neighbors(v):
            if w > v and not decided[w]:
                decided[w] = True
                pairs.append((v, w))
                yield from search(v + 1, skipped)
                pairs.pop()
                decided[w] = False
        if skipped < budget:
            yield from search(v + 1, skipped + 1)
        decided[v] = False

    return search(0, 0)


def _minimum_deficiency(graph: Multigraph) -> int:
    for deficiency in range(graph.n % 2, graph.n + 1, 2):
        if next(_matchings_missing_at_most(graph, deficiency), None) is not None:
            return deficiency
    return graph.n


def _shared_neighbor(graph: Multigraph, pairs: Pairs) -> Optional[Tuple[int, int, int]]:
    covered = {v for pair in pairs for v in pair}
    for w in range(graph.n):
        bare = [u for u in graph.neighbors(w) if u not in covered]
        if len(bare) >= 2:
            return bare[0], bare[1], w
    return None


def oracle_matching_number(graph: Multigraph, edge_budget: int = DEFAULT_EDGE_BUDGET) -> int:
    """nu(G) by exhaustive search.

    Raises:
        BudgetExceededError: The graph has more distinct edges than ``edge_budget``.
    """
    _check_budget(graph, edge_budget)
    return (graph.n - _minimum_deficiency(graph)) // 2


def enumerate_maximum_matchings(
    graph: Multigraph,
    edge_budget: int = DEFAULT_EDGE_BUDGET,
) -> List[Matching]:
    """Every maximum matching of G, in a deterministic order.

    Parallel edges collapse: a matching is a set of vertex pairs.

    Raises:
        BudgetExceededError: The graph has more distinct edges than ``edge_budget``.
    """
    _check_budget(graph, edge_budget)
    deficiency = _minimum_deficiency(graph)
    return [
        Matching.of(graph, pairs)
        for pairs in _matchings_missing_at_most(graph, deficiency)
    ]


def exists_good_maximum_matching(
    graph: Multigraph,
    edge_budget: int = DEFAULT_EDGE_BUDGET,
) -> OracleVerdict:
    """Decide whether some maximum matching leaves no two neighbors-sharing vertices bare.

    Args:
        graph: Graph to search; may be non-regular.
        edge_budget: Upper bound on the number of distinct edges.

    Returns:
        OracleVerdict with nu, the number of maximum matchings and the first
        good one found.

    Raises:
        BudgetExceededError: The graph has more distinct edges than ``edge_budget``.
    """
    _check_budget(graph, edge_budget)
    deficiency = _minimum_deficiency(graph)
    count = 0
    witness: Optional[Pairs] = None
    for pairs in _matchings_missing_at_most(graph, deficiency):
        count += 1
        if witness is None and _shared_neighbor(graph, pairs) is None:
            witness = pairs
    logger.debug(
        "oracle: n=%d nu=%d maximum matchings=%d good=%s",
        graph.n,
        (graph.n - deficiency) // 2,
        count,
        witness is not None,
    )
    return OracleVerdict(
        nu=(graph.n - deficiency) // 2,
        maximum_matching_count=count,
        good_exists=witness is not None,
        witness=Matching.of(graph, witness) if witness is not None else None,
    )
