"""Core graph models: multigraphs, matchings and bipartite views."""

from collections import defaultdict
from typing import Any, Dict, FrozenSet, Iterable, List, Optional, Tuple

import networkx as nx
from pydantic import BaseModel, ConfigDict, Field, PrivateAttr

from ..errors import ContractViolationError, StructureError

VertexSet = Tuple[int, ...]
EdgeRecord = Tuple[int, int, int]

MULTIPLICITY_ATTR = "multiplicity"


def vertex_set(vertices: Iterable[int]) -> VertexSet:
    """Normalize an iterable of vertex ids into a sorted duplicate-free tuple."""
    return tuple(sorted(set(vertices)))


class Multigraph(BaseModel):
    """Immutable loopless multigraph on the vertices 0..n-1.

    Parallel edges are a multiplicity on the unordered pair. Degrees count
    multiplicities; neighborhoods are sets of distinct vertices.
    """

    model_config = ConfigDict(frozen=True)

    n: int = Field(..., ge=0, description="Number of vertices")
    edges: Tuple[EdgeRecord, ...] = Field(
        default=(),
        description="Edge records (u, v, multiplicity) with u < v, sorted",
    )

    _adjacency: List[Tuple[Tuple[int, int], ...]] = PrivateAttr(default_factory=list)
    _degrees: List[int] = PrivateAttr(default_factory=list)

    def model_post_init(self, __context: Any) -> None:
        adjacency: List[List[Tuple[int, int]]] = [[] for _ in range(self.n)]
        previous: Optional[Tuple[int, int]] = None
        for u, v, m in self.edges:
            if u == v:
                raise ContractViolationError(
                    f"loop at vertex {u}: multigraphs here are loopless"
                )
            if not (0 <= u < v < self.n):
                raise ContractViolationError(
                    f"edge ({u}, {v}) is not a normalized pair within [0, {self.n})"
                )
            if m < 1:
                raise ContractViolationError(f"edge ({u}, {v}) has multiplicity {m} < 1")
            if previous is not None and (u, v) <= previous:
                raise ContractViolationError("edge records must be sorted and unique per pair")
            previous = (u, v)
            adjacency[u].append((v, m))
            adjacency[v].append((u, m))
        self._adjacency = [tuple(sorted(row)) for row in adjacency]
        self._degrees = [sum(m for _, m in row) for row in adjacency]

    @classmethod
    def from_edges(cls, n: int, records: Iterable[Tuple[int, ...]]) -> "Multigraph":
        """Build a multigraph from (u, v) or (u, v, m) records, merging duplicates.

        Args:
            n: Vertex count.
            records: Edge records; a missing multiplicity means 1.

        Returns:
            Multigraph with normalized, merged edge records.
        """
        merged: Dict[Tuple[int, int], int] = defaultdict(int)
        for record in records:
            u, v = record[0], record[1]
            m = record[2] if len(record) > 2 else 1
            if u == v:
                raise ContractViolationError(
                    f"loop at vertex {u}: multigraphs here are loopless"
                )
            merged[(min(u, v), max(u, v))] += m
        edges = tuple((u, v, m) for (u, v), m in sorted(merged.items()))
        return cls(n=n, edges=edges)

    @classmethod
    def from_networkx(cls, graph: nx.Graph) -> "Multigraph":
        """Convert a networkx graph; parallel edges of a MultiGraph become multiplicities."""
        relabeled = nx.convert_node_labels_to_integers(graph, ordering="sorted")
        if relabeled.is_multigraph():
            records = [(u, v, 1) for u, v in relabeled.edges()]
        else:
            records = [
                (u, v, data.get(MULTIPLICITY_ATTR, 1))
                for u, v, data in relabeled.edges(data=True)
            ]
        return cls.from_edges(relabeled.number_of_nodes(), records)

    def to_networkx(self) -> nx.Graph:
        """Simple-support networkx graph carrying the multiplicity as an edge attribute."""
        graph = nx.Graph()
        graph.add_nodes_from(range(self.n))
        for u, v, m in self.edges:
            graph.add_edge(u, v, **{MULTIPLICITY_ATTR: m})
        return graph

    def degree(self, v: int) -> int:
        return self._degrees[v]

    def neighbors(self, v: int) -> VertexSet:
        return tuple(w for w, _ in self._adjacency[v])

    def adjacency(self, v: int) -> Tuple[Tuple[int, int], ...]:
        """Sorted (neighbor, multiplicity) pairs of v."""
        return self._adjacency[v]

    def multiplicity(self, u: int, v: int) -> int:
        for w, m in self._adjacency[u]:
            if w == v:
                return m
        return 0

    def has_edge(self, u: int, v: int) -> bool:
        return self.multiplicity(u, v) > 0

    @property
    def is_simple(self) -> bool:
        return all(m == 1 for _, _, m in self.edges)

    @property
    def support_edge_count(self) -> int:
        return len(self.edges)

    @property
    def total_multiplicity(self) -> int:
        return sum(m for _, _, m in self.edges)

    def neighborhood(self, vertices: Iterable[int]) -> VertexSet:
        """N(X): distinct neighbors of any vertex of X, X itself included if adjacent."""
        found = set()
        for v in vertices:
            found.update(self.neighbors(v))
        return vertex_set(found)

    def edges_between(self, left: Iterable[int], right: Iterable[int]) -> int:
        """|[X, Y]| counted with multiplicity for disjoint X and Y."""
        targets = set(right)
        return sum(m for v in left for w, m in self._adjacency[v] if w in targets)


class DegreeProfile(BaseModel):
    """Minimum and maximum degree, and k when the graph is k-regular."""

    model_config = ConfigDict(frozen=True)

    min_degree: int = Field(..., description="delta(G)")
    max_degree: int = Field(..., description="Delta(G)")
    regular_k: Optional[int] = Field(None, description="k when delta(G) = Delta(G)")


def degree_profile(graph: Multigraph) -> DegreeProfile:
    """Compute (delta, Delta, regular_k) counting multiplicities."""
    degrees = [graph.degree(v) for v in range(graph.n)]
    if not degrees:
        return DegreeProfile(min_degree=0, max_degree=0, regular_k=0)
    low, high = min(degrees), max(degrees)
    return DegreeProfile(
        min_degree=low,
        max_degree=high,
        regular_k=low if low == high else None,
    )


class Matching(BaseModel):
    """A set of vertex-disjoint edges of a host multigraph."""

    model_config = ConfigDict(frozen=True)

    host: Multigraph = Field(..., description="Graph the matching lives in")
    pairs: FrozenSet[Tuple[int, int]] = Field(
        default_factory=frozenset,
        description="Matched pairs (u, v) with u < v",
    )

    _mate: Dict[int, int] = PrivateAttr(default_factory=dict)

    def model_post_init(self, __context: Any) -> None:
        mate: Dict[int, int] = {}
        for u, v in self.pairs:
            if u >= v:
                raise ContractViolationError(f"pair ({u}, {v}) is not normalized")
            if not self.host.has_edge(u, v):
                raise ContractViolationError(f"pair ({u}, {v}) is not an edge of the host")
            if u in mate or v in mate:
                raise ContractViolationError(f"pair ({u}, {v}) overlaps another pair")
            mate[u] = v
            mate[v] = u
        self._mate = mate

    @classmethod
    def of(cls, host: Multigraph, pairs: Iterable[Tuple[int, int]]) -> "Matching":
        """Build a matching from unordered pairs."""
        return cls(host=host, pairs=frozenset((min(u, v), max(u, v)) for u, v in pairs))

    def __len__(self) -> int:
        return len(self.pairs)

    def mate(self, v: int) -> Optional[int]:
        return self._mate.get(v)

    def covers(self, v: int) -> bool:
        return v in self._mate

    def saturated(self) -> VertexSet:
        return vertex_set(self._mate)

    def unsaturated(self) -> VertexSet:
        return tuple(v for v in range(self.host.n) if v not in self._mate)

    def sorted_pairs(self) -> List[Tuple[int, int]]:
        return sorted(self.pairs)

    def mates(self) -> Dict[int, int]:
        """Copy of the vertex-to-partner map."""
        return dict(self._mate)


class BipartiteGraph(BaseModel):
    """A multigraph with a declared bipartition (left, right)."""

    model_config = ConfigDict(frozen=True)

    graph: Multigraph = Field(..., description="Underlying multigraph")
    left: VertexSet = Field(..., description="Left side (the A side)")
    right: VertexSet = Field(..., description="Right side (the B side)")

    _left_set: FrozenSet[int] = PrivateAttr(default_factory=frozenset)

    def model_post_init(self, __context: Any) -> None:
        left, right = set(self.left), set(self.right)
        if left & right or left | right != set(range(self.graph.n)):
            raise StructureError("declared sides do not partition the vertex set")
        for u, v, _ in self.graph.edges:
            if (u in left) == (v in left):
                raise StructureError(f"edge ({u}, {v}) lies inside one declared side")
        self._left_set = frozenset(left)

    @classmethod
    def build(
        cls,
        left_size: int,
        right_size: int,
        edges: Iterable[Tuple[int, int, int]],
    ) -> "BipartiteGraph":
        """Build from (left index, right index, multiplicity) records.

        Left vertices get ids 0..left_size-1 and right vertices follow them.
        """
        records = [(i, left_size + j, m) for i, j, m in edges]
        graph = Multigraph.from_edges(left_size + right_size, records)
        return cls(
            graph=graph,
            left=tuple(range(left_size)),
            right=tuple(range(left_size, left_size + right_size)),
        )

    def is_left(self, v: int) -> bool:
        return v in self._left_set

    def degree(self, v: int) -> int:
        return self.graph.degree(v)

    def neighbors(self, v: int) -> VertexSet:
        return self.graph.neighbors(v)

    def max_degree(self, vertices: Iterable[int]) -> Optional[int]:
        """Delta(X), or None for an empty X."""
        degrees = [self.graph.degree(v) for v in vertices]
        return max(degrees) if degrees else None

    def min_degree(self, vertices: Iterable[int]) -> Optional[int]:
        """delta(X), or None for an empty X."""
        degrees = [self.graph.degree(v) for v in vertices]
        return min(degrees) if degrees else None
