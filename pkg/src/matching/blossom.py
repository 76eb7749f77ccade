"""Edmonds' blossom algorithm on the simple support of a multigraph.

The search keeps a parent forest and a blossom base per vertex; an odd cycle
closing inside the forest is shrunk by re-basing its vertices. A search can
start from any matching, and augmenting only ever adds saturated vertices.
"""

import logging
from collections import deque
from typing import Iterable, List, Optional, Tuple

from ..errors import ContractViolationError, FactorCriticalityError, TheoryViolationError
from ..models.graph import Matching, Multigraph

logger = logging.getLogger(__name__)

UNMATCHED = -1


class BlossomMatcher:
    """Augmenting-path search over an induced subgraph of a multigraph.

    Vertices are relabeled to 0..m-1 internally in increasing id order, so
    roots and neighbors are always scanned lowest id first.
    """

    def __init__(self, graph: Multigraph, vertices: Optional[Iterable[int]] = None):
        self.graph = graph
        self.vertices: List[int] = (
            sorted(set(vertices)) if vertices is not None else list(range(graph.n))
        )
        self._index = {v: i for i, v in enumerate(self.vertices)}
        self._adj: List[List[int]] = [[] for _ in self.vertices]
        for i, v in enumerate(self.vertices):
            for w in graph.neighbors(v):
                j = self._index.get(w)
                if j is not None:
                    self._adj[i].append(j)
        self.mate: List[int] = [UNMATCHED] * len(self.vertices)
        self._parent: List[int] = []
        self._base: List[int] = []

    def load(self, pairs: Iterable[Tuple[int, int]]) -> None:
        """Seed the search with an existing matching inside the vertex set."""
        for u, v in pairs:
            i, j = self._index.get(u), self._index.get(v)
            if i is None or j is None:
                raise ContractViolationError(f"pair ({u}, {v}) leaves the searched vertex set")
            if self.mate[i] != UNMATCHED or self.mate[j] != UNMATCHED:
                raise ContractViolationError(f"pair ({u}, {v}) overlaps another pair")
            self.mate[i], self.mate[j] = j, i

    def pairs(self) -> List[Tuple[int, int]]:
        return [
            (self.vertices[i], self.vertices[j])
            for i, j in enumerate(self.mate)
            if j != UNMATCHED and i < j
        ]

    def size(self) -> int:
        return sum(1 for j in self.mate if j != UNMATCHED) // 2

    def _lowest_common_base(self, a: int, b: int) -> int:
        seen = [False] * len(self.mate)
        while True:
            a = self._base[a]
            seen[a] = True
            if self.mate[a] == UNMATCHED:
                break
            a = self._parent[self.mate[a]]
        while True:
            b = self._base[b]
            if seen[b]:
                return b
            b = self._parent[self.mate[b]]

    def _mark_path(self, v: int, base: int, child: int, in_blossom: List[bool]) -> None:
        while self._base[v] != base:
            in_blossom[self._base[v]] = True
            in_blossom[self._base[self.mate[v]]] = True
            self._parent[v] = child
            child = self.mate[v]
            v = self._parent[self.mate[v]]

    def find_augmenting_path(self, root: int) -> int:
        """BFS for an augmenting path from an exposed root.

        Returns:
            The exposed endpoint reached, or UNMATCHED when none exists.
        """
        size = len(self.mate)
        used = [False] * size
        self._parent = [UNMATCHED] * size
        self._base = list(range(size))
        used[root] = True
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for to in self._adj[v]:
                if self._base[v] == self._base[to] or self.mate[v] == to:
                    continue
                if to == root or (
                    self.mate[to] != UNMATCHED and self._parent[self.mate[to]] != UNMATCHED
                ):
                    base = self._lowest_common_base(v, to)
                    in_blossom = [False] * size
                    self._mark_path(v, base, to, in_blossom)
                    self._mark_path(to, base, v, in_blossom)
                    for i in range(size):
                        if in_blossom[self._base[i]]:
                            self._base[i] = base
                            if not used[i]:
                                used[i] = True
                                queue.append(i)
                elif self._parent[to] == UNMATCHED:
                    self._parent[to] = v
                    if self.mate[to] == UNMATCHED:
                        return to
                    used[self.mate[to]] = True
                    queue.append(self.mate[to])
        return UNMATCHED

    def _augment(self, end: int) -> None:
        v = end
        while v != UNMATCHED:
            pv = self._parent[v]
            ppv = self.mate[pv]
            self.mate[v] = pv
            self.mate[pv] = v
            v = ppv

    def augment_from(self, root: int) -> bool:
        """Augment along a path from ``root`` if one exists.

        Raises:
            TheoryViolationError: The augmentation unsaturated a vertex or did
                not grow the matching by exactly one edge.
        """
        end = self.find_augmenting_path(root)
        if end == UNMATCHED:
            return False
        before = {i for i, j in enumerate(self.mate) if j != UNMATCHED}
        self._augment(end)
        after = {i for i, j in enumerate(self.mate) if j != UNMATCHED}
        if not before <= after or len(after) != len(before) + 2:
            raise TheoryViolationError(
                "augmentation changed the saturated set non-monotonically",
                {"root": self.vertices[root], "end": self.vertices[end]},
            )
        logger.debug(
            "augmented %d..%d, size now %d",
            self.vertices[root],
            self.vertices[end],
            len(after) // 2,
        )
        return True

    def run(self) -> None:
        """Augment until maximum; one pass over roots suffices."""
        for root in range(len(self.mate)):
            if self.mate[root] == UNMATCHED:
                self.augment_from(root)

    def has_augmenting_path(self) -> bool:
        return any(
            self.mate[root] == UNMATCHED and self.find_augmenting_path(root) != UNMATCHED
            for root in range(len(self.mate))
        )


def maximum_matching(
    graph: Multigraph,
    vertices: Optional[Iterable[int]] = None,
    initial: Optional[Matching] = None,
) -> Matching:
    """Maximum matching of ``graph`` (or of the subgraph induced by ``vertices``).

    Args:
        graph: Host multigraph; multiplicities are ignored.
        vertices: Optional vertex subset to restrict to.
        initial: Optional matching to grow; every vertex it covers stays covered.

    Returns:
        A maximum matching of the (induced) graph, as a Matching of ``graph``.
    """
    matcher = BlossomMatcher(graph, vertices)
    if initial is not None:
        matcher.load(initial.pairs)
    matcher.run()
    return Matching.of(graph, matcher.pairs())


def matching_number(graph: Multigraph, vertices: Optional[Iterable[int]] = None) -> int:
    """nu of the (induced) graph."""
    matcher = BlossomMatcher(graph, vertices)
    matcher.run()
    return matcher.size()


def is_maximum(graph: Multigraph, matching: Matching) -> bool:
    """Berge certificate: True iff no augmenting path exists.

    Raises:
        ContractViolationError: ``matching`` belongs to another graph.
    """
    _require_host(graph, matching)
    matcher = BlossomMatcher(graph)
    matcher.load(matching.pairs)
    return not matcher.has_augmenting_path()


def perfect_matching(
    graph: Multigraph,
    vertices: Optional[Iterable[int]] = None,
) -> Optional[Matching]:
    """A perfect matching of the (induced) graph, or None when there is none."""
    matcher = BlossomMatcher(graph, vertices)
    if len(matcher.vertices) % 2:
        return None
    matcher.run()
    if 2 * matcher.size() != len(matcher.vertices):
        return None
    return Matching.of(graph, matcher.pairs())


def near_perfect_avoiding(
    graph: Multigraph,
    avoid: int,
    within: Optional[Iterable[int]] = None,
) -> Matching:
    """Perfect matching of Q - avoid, where Q is ``graph`` or its subgraph on ``within``.

    Raises:
        ContractViolationError: ``avoid`` is not a vertex of Q.
        FactorCriticalityError: Q - avoid has no perfect matching.
    """
    component = set(within) if within is not None else set(range(graph.n))
    if avoid not in component:
        raise ContractViolationError(f"vertex {avoid} is not in the component")
    component.discard(avoid)
    found = perfect_matching(graph, component)
    if found is None:
        raise FactorCriticalityError(
            f"removing {avoid} leaves no perfect matching",
            {"component": sorted(component | {avoid}), "avoid": avoid},
        )
    return found


def _require_host(graph: Multigraph, matching: Matching) -> None:
    if matching.host is not graph and matching.host != graph:
        raise ContractViolationError("matching does not belong to the given graph")
