"""Mutable {P2, P3}-packing state with the alternating orientation.

Edges of the packing S point from A to B and every other edge of H points
from B to A. Directed paths in this orientation are the exchange paths of
the packing routines: flipping S along one keeps every intermediate vertex
covered.
"""

from collections import deque
from typing import Dict, FrozenSet, Iterable, List, Optional, Tuple

from ..errors import TheoryViolationError
from ..models.graph import BipartiteGraph, Matching
from ..models.structure import Packing


class OrientationState:
    """A packing S on H stored as leaves per A vertex and center per B vertex."""

    def __init__(self, host: BipartiteGraph, edges: Iterable[Tuple[int, int]] = ()):
        self.host = host
        self.leaves: Dict[int, List[int]] = {a: [] for a in host.left}
        self.center: Dict[int, int] = {}
        for a, b in edges:
            self._add(a, b)

    @classmethod
    def from_matching(cls, host: BipartiteGraph, matching: Matching) -> "OrientationState":
        """All-P2 packing from a matching of H."""
        edges = [(u, v) if host.is_left(u) else (v, u) for u, v in matching.pairs]
        return cls(host, edges)

    @classmethod
    def from_packing(cls, packing: Packing) -> "OrientationState":
        return cls(packing.host, packing.edges())

    def copy(self) -> "OrientationState":
        return OrientationState(self.host, self.edges())

    def edges(self) -> List[Tuple[int, int]]:
        return sorted((a, b) for b, a in self.center.items())

    def key(self) -> FrozenSet[Tuple[int, int]]:
        return frozenset(self.edges())

    def _add(self, a: int, b: int) -> None:
        if b in self.center:
            raise TheoryViolationError(f"B vertex {b} would get S-degree 2", {"edge": [a, b]})
        if len(self.leaves[a]) >= 2:
            raise TheoryViolationError(f"A vertex {a} would get S-degree 3", {"edge": [a, b]})
        self.leaves[a].append(b)
        self.leaves[a].sort()
        self.center[b] = a

    def _remove(self, a: int, b: int) -> None:
        self.leaves[a].remove(b)
        del self.center[b]

    def s_degree(self, v: int) -> int:
        if self.host.is_left(v):
            return len(self.leaves[v])
        return 1 if v in self.center else 0

    def is_covered(self, v: int) -> bool:
        return self.s_degree(v) > 0

    def in_p2(self, b: int) -> bool:
        a = self.center.get(b)
        return a is not None and len(self.leaves[a]) == 1

    def out_neighbors(self, v: int) -> List[int]:
        if self.host.is_left(v):
            return list(self.leaves[v])
        own = self.center.get(v)
        return [a for a in self.host.neighbors(v) if a != own]

    def reach(self, root: int) -> Dict[int, Optional[int]]:
        """BFS parent map from ``root``; insertion order is BFS order."""
        parent: Dict[int, Optional[int]] = {root: None}
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for w in self.out_neighbors(v):
                if w not in parent:
                    parent[w] = v
                    queue.append(w)
        return parent

    @staticmethod
    def path_to(parent: Dict[int, Optional[int]], target: int) -> List[int]:
        path = [target]
        while parent[path[-1]] is not None:
            path.append(parent[path[-1]])
        path.reverse()
        return path

    def flip(self, path: List[int]) -> None:
        """Replace S by S xor E(path); every A vertex must stay covered."""
        removals, additions = [], []
        for x, y in zip(path, path[1:]):
            a, b = (x, y) if self.host.is_left(x) else (y, x)
            if self.center.get(b) == a:
                removals.append((a, b))
            else:
                additions.append((a, b))
        for a, b in removals:
            self._remove(a, b)
        for a, b in additions:
            self._add(a, b)
        for a in self.host.left:
            if not self.leaves[a]:
                raise TheoryViolationError(f"flip uncovered A vertex {a}", {"path": path})

    def flipped(self, path: List[int]) -> "OrientationState":
        other = self.copy()
        other.flip(path)
        return other

    def two_w_centers(self, W: FrozenSet[int]) -> List[int]:
        """Centers of P3 components whose two leaves both lie in W."""
        return [
            a
            for a in self.host.left
            if len(self.leaves[a]) == 2 and all(b in W for b in self.leaves[a])
        ]

    def one_w_p3_count(self, W: FrozenSet[int]) -> int:
        return sum(
            1
            for a in self.host.left
            if len(self.leaves[a]) == 2 and sum(b in W for b in self.leaves[a]) == 1
        )

    def to_packing(self) -> Packing:
        components = []
        for a in self.host.left:
            leaves = self.leaves[a]
            if len(leaves) == 1:
                components.append((a, leaves[0]))
            elif len(leaves) == 2:
                components.append((leaves[0], a, leaves[1]))
        return Packing(host=self.host, components=tuple(components))
