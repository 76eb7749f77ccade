"""Exhaustive enumeration of small k-regular (multi)graphs.

Graphs are built row by row as symmetric multiplicity matrices with residual
degrees. Among later vertices whose columns agree on every finished row, the
current row is non-increasing, which keeps the lexicographically largest
labeling of every isomorphism class. Remaining isomorphs are removed with a
multiplicity-aware Weisfeiler-Lehman bucket followed by an exact test.
"""

import logging
from typing import Dict, Iterator, List, Tuple

import networkx as nx

from ..models.graph import MULTIPLICITY_ATTR, Multigraph
from .random_regular import check_feasible

logger = logging.getLogger(__name__)


def _matrices(n: int, k: int, simple: bool) -> Iterator[List[List[int]]]:
    cap = 1 if simple else k
    matrix = [[0] * n for _ in range(n)]
    residual = [k] * n

    def fill(u: int, w: int, previous: Dict[Tuple[int, ...], int]) -> Iterator[List[List[int]]]:
        if w == n:
            if residual[u] == 0:
                yield from row(u + 1)
            return
        spare = sum(min(residual[x], cap) for x in range(w + 1, n))
        signature = tuple(matrix[r][w] for r in range(u))
        upper = min(residual[u], residual[w], cap, previous.get(signature, cap))
        lower = max(0, residual[u] - spare)
        for m in range(upper, lower - 1, -1):
            matrix[u][w] = matrix[w][u] = m
            residual[u] -= m
            residual[w] -= m
            shadow = dict(previous)
            shadow[signature] = m
            yield from fill(u, w + 1, shadow)
            residual[u] += m
            residual[w] += m
        matrix[u][w] = matrix[w][u] = 0

    def row(u: int) -> Iterator[List[List[int]]]:
        if u == n:
            yield matrix
            return
        yield from fill(u, u + 1, {})

    return row(0)


def _as_multigraph(matrix: List[List[int]]) -> Multigraph:
    n = len(matrix)
    return Multigraph.from_edges(
        n,
        [(u, w, matrix[u][w]) for u in range(n) for w in range(u + 1, n) if matrix[u][w]],
    )


def _same_graph(first: nx.Graph, second: nx.Graph) -> bool:
    return nx.is_isomorphic(
        first,
        second,
        edge_match=lambda a, b: a[MULTIPLICITY_ATTR] == b[MULTIPLICITY_ATTR],
    )


def enumerate_regular(n: int, k: int, simple: bool = True, dedupe: bool = True) -> List[Multigraph]:
    """All k-regular (multi)graphs on n labeled vertices, up to isomorphism when ``dedupe``.

    Disconnected graphs are included.

    Raises:
        InfeasibleError: No k-regular graph on n vertices exists.
    """
    check_feasible(n, k, simple)
    found: List[Multigraph] = []
    buckets: Dict[str, List[nx.Graph]] = {}
    for matrix in _matrices(n, k, simple):
        graph = _as_multigraph(matrix)
        if not dedupe:
            found.append(graph)
            continue
        view = graph.to_networkx()
        key = nx.weisfeiler_lehman_graph_hash(view, edge_attr=MULTIPLICITY_ATTR)
        bucket = buckets.setdefault(key, [])
        if any(_same_graph(view, other) for other in bucket):
            continue
        bucket.append(view)
        found.append(graph)
    logger.info("n=%d k=%d simple=%s: %d graphs", n, k, simple, len(found))
    return found


def regular_orders(n_max: int, k: int, simple: bool) -> List[int]:
    """Orders n <= n_max admitting a k-regular graph of the requested kind."""
    start = k + 1 if simple else 2
    if k == 0:
        start = 1
    return [n for n in range(start, n_max + 1) if (n * k) % 2 == 0]
