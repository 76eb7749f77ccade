"""Construction pipelines per regime."""

import logging
from typing import Dict, List

from ..errors import TheoryViolationError
from ..models.report import Regime
from ..models.structure import ConstructionPlan
from ..packing.packings import refined_packing, saturate_W, split_packing
from .base import BasePipeline

logger = logging.getLogger(__name__)


class SaturatingPipeline(BasePipeline):
    """Saturate W = {q : d_H(q) >= k}, then leave a good vertex bare in every unmatched component.

    Serves simple graphs of any degree, 4-regular multigraphs and low-degree
    multigraphs.
    """

    regime = Regime.SIMPLE

    def plan(self) -> ConstructionPlan:
        """Build the plan from a W-saturating maximum matching of H.

        Returns:
            ConstructionPlan with an avoid vertex for every component.

        Raises:
            TheoryViolationError: An unmatched component has no good vertex.
        """
        matching = saturate_W(self.host, self.host.W)
        avoid: Dict[int, int] = {}
        bare: List[int] = []

        for index, component in enumerate(self.ge.components):
            endpoint = self.lifted_endpoint(matching, index)
            if endpoint is not None:
                avoid[index] = endpoint
                continue
            good = self.good(index)
            if not good:
                raise TheoryViolationError(
                    f"unmatched component {index} has no good vertex",
                    {
                        "component": list(component),
                        "edges_to_a": self.host.degree(self.host.q(index)),
                        "k": self.k,
                    },
                )
            avoid[index] = good[0]
            bare.append(good[0])
            logger.debug("component %d leaves good vertex %d unsaturated", index, good[0])

        return ConstructionPlan(
            h_matching=matching,
            X=tuple(bare),
            per_component_avoid=avoid,
            threshold=self.host.threshold,
        )


class FourRegularPipeline(SaturatingPipeline):
    """4-regular multigraphs: every tail component has exactly two edges into A."""

    regime = Regime.MULTI_4

    def plan(self) -> ConstructionPlan:
        for index in range(self.ge.component_count):
            degree = self.host.degree(self.host.q(index))
            if degree % 2:
                raise TheoryViolationError(
                    f"component {index} has an odd number ({degree}) of edges into A",
                    {"component": list(self.ge.components[index]), "edges_to_a": degree},
                )
        return super().plan()


class LowDegreePipeline(SaturatingPipeline):
    """Multigraphs of degree at most three."""

    regime = Regime.MULTI_LOW


class FiveRegularPipeline(BasePipeline):
    """5-regular multigraphs: refined packing, split into M and M', two avoid rules.

    A component covered by M avoids its lifted endpoint. Any other component
    leaves a good vertex bare when it has one; otherwise it must be a
    three-vertex component with three edges into A covered by M', and it
    leaves the lifted M' endpoint bare.
    """

    regime = Regime.MULTI_5

    def plan(self) -> ConstructionPlan:
        packing = refined_packing(self.host, self.host.W, self.host.U)
        primary, auxiliary = split_packing(packing, self.host.W)

        tail = [
            index
            for index in range(self.ge.component_count)
            if self.host.q(index) not in self.host.W
        ]
        beta = sum(1 for index in tail if not self.good(index))

        avoid: Dict[int, int] = {}
        bare: List[int] = []
        for index, component in enumerate(self.ge.components):
            endpoint = self.lifted_endpoint(primary, index)
            if endpoint is not None:
                avoid[index] = endpoint
                continue
            good = self.good(index)
            if good:
                avoid[index] = good[0]
                bare.append(good[0])
                continue
            q = self.host.q(index)
            spare = self.lifted_endpoint(auxiliary, index)
            if len(component) != 3 or self.host.degree(q) != 3 or spare is None:
                raise TheoryViolationError(
                    f"component {index} has no good vertex and is not a covered triangle",
                    {
                        "component": list(component),
                        "edges_to_a": self.host.degree(q),
                        "aux_covered": spare is not None,
                    },
                )
            avoid[index] = spare
            bare.append(spare)
            logger.debug("component %d leaves its M' endpoint %d unsaturated", index, spare)

        return ConstructionPlan(
            h_matching=primary,
            h_matching_aux=auxiliary,
            X=tuple(bare),
            per_component_avoid=avoid,
            threshold=self.host.threshold,
            beta=beta,
        )
