"""Base class for construction pipelines."""

import logging
from abc import ABC, abstractmethod
from typing import Dict, List, Optional, Tuple

from ..decomposition.gallai_edmonds import contract, good_vertices
from ..errors import ContractViolationError
from ..models.graph import Matching, Multigraph, VertexSet
from ..models.report import ComponentChoice, Regime
from ..models.structure import ConstructionPlan, ContractedBipartite, GallaiEdmonds

logger = logging.getLogger(__name__)


def lift_edge(graph: Multigraph, ge: GallaiEdmonds, a_local: int, q: int) -> Tuple[int, int]:
    """Realize the H-edge (a_local, q_i) as a G-edge (a, v) with v in Q_i.

    Among several realizations the lowest-id v of Q_i adjacent to a wins.

    Raises:
        ContractViolationError: The pair is not an edge of H.
    """
    if not 0 <= a_local < len(ge.A):
        raise ContractViolationError(f"{a_local} is not an A vertex of H")
    a = ge.A[a_local]
    component = ge.components[q - len(ge.A)]
    for v in component:
        if graph.has_edge(a, v):
            return a, v
    raise ContractViolationError(f"({a_local}, {q}) is not an edge of H")


class BasePipeline(ABC):
    """Abstract base class for construction pipelines.

    A pipeline turns the Gallai-Edmonds partition of a regular graph into a
    ConstructionPlan: a matching of the contracted graph H and the vertex each
    component leaves unsaturated.
    """

    regime: Regime

    def __init__(self, graph: Multigraph, ge: GallaiEdmonds, k: int):
        """Initialize a pipeline.

        Args:
            graph: Regular input graph.
            ge: Its Gallai-Edmonds partition.
            k: Its regularity.
        """
        self.graph = graph
        self.ge = ge
        self.k = k
        self.host: ContractedBipartite = contract(graph, ge, k)
        self._good: Dict[int, VertexSet] = {}

    @abstractmethod
    def plan(self) -> ConstructionPlan:
        """Build the construction plan.

        Returns:
            ConstructionPlan for ``assemble``.
        """
        pass

    def good(self, index: int) -> VertexSet:
        """Good vertices of component ``index``."""
        if index not in self._good:
            self._good[index] = good_vertices(self.graph, self.ge.components[index])
        return self._good[index]

    def lifted_endpoint(self, matching: Matching, index: int) -> Optional[int]:
        """Vertex of Q_index that the lifted M-edge of q_index lands on, if any."""
        q = self.host.q(index)
        mate = matching.mate(q)
        if mate is None:
            return None
        return lift_edge(self.graph, self.ge, mate, q)[1]

    def degree_class(self, index: int) -> str:
        q = self.host.q(index)
        if q in self.host.W:
            return "W"
        if q in self.host.U:
            return "U"
        return "tail"

    def describe(self, plan: ConstructionPlan) -> List[ComponentChoice]:
        """Per-component summary of a plan."""
        return [
            ComponentChoice(
                index=index,
                vertices=component,
                edges_to_a=self.host.degree(self.host.q(index)),
                good_vertices=self.good(index),
                avoid=plan.per_component_avoid.get(index),
                degree_class=self.degree_class(index),
            )
            for index, component in enumerate(self.ge.components)
        ]
