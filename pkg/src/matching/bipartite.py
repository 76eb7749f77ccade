"""Hopcroft-Karp bipartite matching with optional starting matching."""

import logging
from collections import deque
from typing import Dict, List, Mapping, Optional, Sequence, Set, Tuple

from ..models.graph import BipartiteGraph, Matching, vertex_set

logger = logging.getLogger(__name__)

INFINITY = float("inf")
FREE = None


def hopcroft_karp(
    adjacency: Mapping[int, Sequence[int]],
    initial: Optional[Mapping[int, int]] = None,
) -> Dict[int, int]:
    """Maximum matching of a bipartite graph given as left vertex -> right neighbors.

    Roots and neighbors are scanned in the given order; augmentations never
    unmatch a left vertex that was matched before.

    Args:
        adjacency: Left vertices mapped to their right-side neighbors.
        initial: Optional starting matching, left -> right.

    Returns:
        Maximum matching as a left -> right mapping.
    """
    matched: Dict[int, int] = dict(initial or {})
    reverse: Dict[int, int] = {v: u for u, v in matched.items()}
    layer: Dict[Optional[int], float] = {}

    def breadth_first_search() -> bool:
        queue = deque()
        for u in adjacency:
            if u in matched:
                layer[u] = INFINITY
            else:
                layer[u] = 0
                queue.append(u)
        layer[FREE] = INFINITY
        while queue:
            u = queue.popleft()
            if layer[u] < layer[FREE]:
                for v in adjacency[u]:
                    next_u = reverse.get(v)
                    if layer[next_u] == INFINITY:
                        layer[next_u] = layer[u] + 1
                        queue.append(next_u)
        return layer[FREE] != INFINITY

    def depth_first_search(u: int) -> bool:
        for v in adjacency[u]:
            next_u = reverse.get(v)
            if layer[next_u] == layer[u] + 1:
                if next_u is FREE or depth_first_search(next_u):
                    matched[u], reverse[v] = v, u
                    return True
        layer[u] = INFINITY
        return False

    while breadth_first_search():
        for u in adjacency:
            if u not in matched:
                depth_first_search(u)

    return matched


def bipartite_max_matching(
    bipartite: BipartiteGraph,
    initial: Optional[Matching] = None,
) -> Matching:
    """Maximum matching of a bipartite graph with declared sides.

    Structure errors are raised when the BipartiteGraph is built, so any
    instance reaching here is properly two-sided.
    """
    adjacency = {a: list(bipartite.neighbors(a)) for a in bipartite.left}
    start = None
    if initial is not None:
        start = {}
        for u, v in initial.pairs:
            a, b = (u, v) if bipartite.is_left(u) else (v, u)
            start[a] = b
    found = hopcroft_karp(adjacency, start)
    return Matching.of(bipartite.graph, found.items())


def hall_violator(
    bipartite: BipartiteGraph,
    side: Sequence[int],
    matched: Mapping[int, int],
) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    """Alternating-reachability witness for a failed side-saturating matching.

    Starting from the unmatched vertices of ``side`` and alternating along
    non-matching then matching edges, the reached side vertices Z satisfy
    |N(Z)| < |Z|.

    Args:
        bipartite: Host graph.
        side: Vertices that should have been saturated.
        matched: Maximum matching from ``side`` into their neighbors.

    Returns:
        (Z, N(Z)).
    """
    reverse = {v: u for u, v in matched.items()}
    reached: Set[int] = {u for u in side if u not in matched}
    queue = deque(sorted(reached))
    while queue:
        u = queue.popleft()
        for v in bipartite.neighbors(u):
            partner = reverse.get(v)
            if partner is not None and partner not in reached:
                reached.add(partner)
                queue.append(partner)
    return vertex_set(reached), bipartite.graph.neighborhood(reached)


def inessential_left_vertices(bipartite: BipartiteGraph) -> List[int]:
    """Left vertices missed by some maximum matching.

    ``a`` is essential iff removing it lowers nu by one; an empty result means
    every maximum matching covers the left side.
    """
    adjacency = {a: list(bipartite.neighbors(a)) for a in bipartite.left}
    nu = len(hopcroft_karp(adjacency))
    missed = []
    for a in bipartite.left:
        reduced = {u: nbrs for u, nbrs in adjacency.items() if u != a}
        if len(hopcroft_karp(reduced)) == nu:
            missed.append(a)
    logger.debug("nu(H) = %d, inessential left vertices %s", nu, missed)
    return missed
