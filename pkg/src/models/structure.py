"""Structural models: Gallai-Edmonds partitions, contracted bipartite graphs, packings and plans."""

from typing import Any, Dict, FrozenSet, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, PrivateAttr

from ..errors import ContractViolationError
from .graph import BipartiteGraph, Matching, VertexSet


class GallaiEdmonds(BaseModel):
    """The partition (D, A, C) of a graph and the components of G[D].

    Components are ordered by non-increasing edge count into A, ties broken by
    their smallest vertex.
    """

    model_config = ConfigDict(frozen=True)

    n: int = Field(..., description="Vertex count of the decomposed graph")
    nu: int = Field(..., description="Maximum matching size")
    D: VertexSet = Field(..., description="Vertices missed by some maximum matching")
    A: VertexSet = Field(..., description="N(D) minus D")
    C: VertexSet = Field(..., description="Remaining vertices")
    components: Tuple[VertexSet, ...] = Field(default=(), description="Components of G[D]")
    edge_counts: Tuple[int, ...] = Field(
        default=(),
        description="|[Q_i, A]| per component, with multiplicity",
    )

    @property
    def deficiency(self) -> int:
        return self.n - 2 * self.nu

    @property
    def component_count(self) -> int:
        return len(self.components)

    def component_index(self, v: int) -> Optional[int]:
        for index, component in enumerate(self.components):
            if v in component:
                return index
        return None


class ContractedBipartite(BipartiteGraph):
    """H(A, B): every component of G[D] shrunk to one vertex q_i.

    Local ids: A occupies 0..|A|-1 in the order of ``a_vertices``; q_i is
    ``|A| + i`` and stands for ``components[i]``.
    """

    k: int = Field(..., description="Regularity of the source graph")
    a_vertices: VertexSet = Field(..., description="Original ids of the A side")
    components: Tuple[VertexSet, ...] = Field(..., description="Q_i per B-side vertex")
    W: VertexSet = Field(default=(), description="q_i with d_H(q_i) >= k")
    U: VertexSet = Field(default=(), description="q_i with d_H(q_i) = 3 (k = 5 only)")

    def q(self, index: int) -> int:
        """Local id of q_index."""
        return len(self.a_vertices) + index

    def component_index(self, q: int) -> int:
        return q - len(self.a_vertices)

    def original(self, a_local: int) -> int:
        return self.a_vertices[a_local]

    def local(self, a_original: int) -> int:
        return self.a_vertices.index(a_original)

    @property
    def threshold(self) -> int:
        """t: number of leading components with d_H >= k."""
        return len(self.W)


class Packing(BaseModel):
    """A {P2, P3}-packing of a bipartite graph.

    A P2 is stored as (a, b); a P3 as (b, a, b') with b < b' and its center a on
    the left side.
    """

    model_config = ConfigDict(frozen=True)

    host: BipartiteGraph = Field(..., description="Bipartite host graph")
    components: Tuple[Tuple[int, ...], ...] = Field(default=(), description="P2 and P3 components")

    _owner: Dict[int, Tuple[int, ...]] = PrivateAttr(default_factory=dict)

    def model_post_init(self, __context: Any) -> None:
        owner: Dict[int, Tuple[int, ...]] = {}
        for component in self.components:
            if len(component) not in (2, 3):
                raise ContractViolationError(f"component {component} is neither P2 nor P3")
            center = self.center(component)
            if not self.host.is_left(center):
                raise ContractViolationError(f"component {component} has its center on the B side")
            for leaf in self.leaves(component):
                if self.host.is_left(leaf):
                    raise ContractViolationError(f"component {component} has two A vertices")
                if not self.host.graph.has_edge(center, leaf):
                    raise ContractViolationError(f"({center}, {leaf}) is not an edge of the host")
            for v in component:
                if v in owner:
                    raise ContractViolationError(f"vertex {v} lies in two components")
                owner[v] = component
        self._owner = owner

    @staticmethod
    def center(component: Tuple[int, ...]) -> int:
        return component[0] if len(component) == 2 else component[1]

    @staticmethod
    def leaves(component: Tuple[int, ...]) -> Tuple[int, ...]:
        return component[1:] if len(component) == 2 else (component[0], component[2])

    def component_of(self, v: int) -> Optional[Tuple[int, ...]]:
        return self._owner.get(v)

    def covered(self) -> FrozenSet[int]:
        return frozenset(self._owner)

    def edges(self) -> List[Tuple[int, int]]:
        """All (a, b) edges of the packing."""
        return [
            (self.center(component), leaf)
            for component in self.components
            for leaf in self.leaves(component)
        ]

    def s_degree(self, v: int) -> int:
        component = self._owner.get(v)
        if component is None:
            return 0
        if self.host.is_left(v):
            return len(component) - 1
        return 1


class ConstructionPlan(BaseModel):
    """Choices that determine M*: the H-matchings and the vertex left bare per component."""

    model_config = ConfigDict(frozen=True)

    h_matching: Matching = Field(..., description="M: maximum matching of H")
    h_matching_aux: Optional[Matching] = Field(
        None,
        description="M': auxiliary matching of H (5-regular pipeline)",
    )
    X: VertexSet = Field(default=(), description="Unsaturated representatives")
    per_component_avoid: Dict[int, int] = Field(
        default_factory=dict,
        description="Component index to the vertex its near-perfect matching misses",
    )
    threshold: Optional[int] = Field(
        None,
        description="t: number of components with d_H >= k",
    )
    beta: Optional[int] = Field(
        None,
        description="Number of tail components without a good vertex",
    )
