"""Dispatch, assembly and verification of good maximum matchings."""

import logging
import time
from typing import Dict, List, Optional, Tuple, Type

from ..decomposition.gallai_edmonds import decompose, good_vertices
from ..errors import (
    BudgetExceededError,
    ContractViolationError,
    NotRegularError,
    RegMatchError,
    TheoryViolationError,
    UnsupportedRegimeError,
)
from ..matching.blossom import (
    is_maximum,
    matching_number,
    maximum_matching,
    near_perfect_avoiding,
    perfect_matching,
)
from ..models.graph import Matching, Multigraph, degree_profile
from ..models.report import ConstructionReport, Regime, RunConfig, VerifyReport
from ..models.structure import ConstructionPlan, GallaiEdmonds
from ..oracle.brute_force import exists_good_maximum_matching
from .base import BasePipeline, lift_edge
from .pipelines import (
    FiveRegularPipeline,
    FourRegularPipeline,
    LowDegreePipeline,
    SaturatingPipeline,
)

logger = logging.getLogger(__name__)


def find_shared_neighbor(graph: Multigraph, matching: Matching) -> Optional[Tuple[int, int, int]]:
    """First (u, v, w) with u < v both unsaturated and w adjacent to both, else None."""
    bare = set(matching.unsaturated())
    for w in range(graph.n):
        hits = [u for u in graph.neighbors(w) if u in bare]
        if len(hits) >= 2:
            return hits[0], hits[1], w
    return None


def verify(graph: Multigraph, matching: Matching) -> VerifyReport:
    """Check maximality and the shared-neighbor condition, with a witness.

    Raises:
        ContractViolationError: ``matching`` is not a matching of ``graph``.
    """
    maximum = is_maximum(graph, matching)
    shared = find_shared_neighbor(graph, matching)
    return VerifyReport(
        size=len(matching),
        nu=matching_number(graph),
        is_maximum=maximum,
        property_holds=maximum and shared is None,
        unsaturated=matching.unsaturated(),
        shared_neighbor=shared,
    )


def verify_property(graph: Multigraph, matching: Matching) -> bool:
    """True iff ``matching`` is maximum and no two unsaturated vertices share a neighbor."""
    return is_maximum(graph, matching) and find_shared_neighbor(graph, matching) is None


def assemble(graph: Multigraph, ge: GallaiEdmonds, plan: ConstructionPlan) -> Matching:
    """Lift the H-matching and complete it inside C and every component.

    Args:
        graph: Input graph.
        ge: Its Gallai-Edmonds partition.
        plan: Matching of H plus the vertex each component leaves bare.

    Returns:
        M*: the lifted H-matching, a perfect matching of G[C] and a
        near-perfect matching of every Q_i avoiding its chosen vertex.

    Raises:
        ContractViolationError: The plan does not fit the partition.
        FactorCriticalityError: A chosen vertex cannot be avoided.
        TheoryViolationError: G[C] has no perfect matching, or |M*| is off.
    """
    lifted = [lift_edge(graph, ge, a_local, q) for a_local, q in plan.h_matching.sorted_pairs()]
    if len(lifted) != len(ge.A):
        raise TheoryViolationError(
            "H-matching does not cover A",
            {"size": len(lifted), "|A|": len(ge.A)},
        )
    landed = {v for _, v in lifted}

    pairs: List[Tuple[int, int]] = list(lifted)
    if ge.C:
        inner = perfect_matching(graph, ge.C)
        if inner is None:
            raise TheoryViolationError("G[C] has no perfect matching", {"C": list(ge.C)})
        pairs.extend(inner.pairs)

    for index, component in enumerate(ge.components):
        avoid = plan.per_component_avoid.get(index)
        if avoid is None or avoid not in component:
            raise ContractViolationError(
                f"plan has no valid avoid vertex for component {index}",
                {"component": list(component), "avoid": avoid},
            )
        hit = [v for v in component if v in landed]
        if hit and hit != [avoid]:
            raise ContractViolationError(
                f"component {index} is entered at {hit} but avoids {avoid}",
                {"component": list(component), "avoid": avoid},
            )
        pairs.extend(near_perfect_avoiding(graph, avoid, within=component).pairs)

    result = Matching.of(graph, pairs)
    expected = len(ge.C) // 2 + (len(ge.D) - ge.component_count) // 2 + len(ge.A)
    if len(result) != expected:
        raise TheoryViolationError(
            f"assembled matching has size {len(result)}, expected {expected}",
            {"size": len(result), "expected": expected},
        )
    return result


class ConstructionEngine:
    """Pick the construction for a regular graph and certify its output."""

    PIPELINE_CLASS_MAP: Dict[Regime, Type[BasePipeline]] = {
        Regime.SIMPLE: SaturatingPipeline,
        Regime.MULTI_4: FourRegularPipeline,
        Regime.MULTI_5: FiveRegularPipeline,
        Regime.MULTI_LOW: LowDegreePipeline,
    }

    def __init__(self, config: Optional[RunConfig] = None):
        """Initialize the engine.

        Args:
            config: Run configuration; defaults apply when omitted.
        """
        self.config = config or RunConfig()

    def construct(self, graph: Multigraph) -> ConstructionReport:
        """Build a good maximum matching of a regular graph.

        Args:
            graph: Regular multigraph.

        Returns:
            ConstructionReport whose matching has been re-verified.

        Raises:
            NotRegularError: The graph is not regular.
            UnsupportedRegimeError: No certified construction covers the graph.
            TheoryViolationError: A guaranteed fact failed; the witness says which.
        """
        start_time = time.time()

        k = degree_profile(graph).regular_k
        if k is None:
            profile = degree_profile(graph)
            raise NotRegularError(
                f"graph is not regular (degrees {profile.min_degree}..{profile.max_degree})",
                {"min_degree": profile.min_degree, "max_degree": profile.max_degree},
            )

        ge = decompose(graph)
        regime = self.select_regime(graph, k, ge)
        logger.info("n=%d k=%d deficiency=%d regime=%s", graph.n, k, ge.deficiency, regime.value)

        if regime == Regime.DEFICIENCY_AT_MOST_ONE:
            report = self._finish(graph, k, ge, regime, maximum_matching(graph), None, None)
        elif regime == Regime.MULTI_LOW:
            report = self._construct_low_degree(graph, k, ge)
        elif regime == Regime.MULTI_HIGH:
            self._attempt_high_degree(graph, k, ge)
        else:
            report = self.run_pipeline(graph, k, ge, regime)

        report = report.model_copy(update={"duration_seconds": time.time() - start_time})
        return report

    def select_regime(self, graph: Multigraph, k: int, ge: GallaiEdmonds) -> Regime:
        """Regime for a k-regular graph with the given partition.

        Edgeless graphs take the maximum-matching shortcut whatever their
        deficiency; k >= 7 multigraphs are tagged ``multi-high`` and only get an
        uncertified attempt.

        Raises:
            UnsupportedRegimeError: 6-regular multigraph with deficiency at least 2.
        """
        if ge.deficiency <= 1 or k == 0:
            return Regime.DEFICIENCY_AT_MOST_ONE
        if graph.is_simple:
            return Regime.SIMPLE
        if k == 4:
            return Regime.MULTI_4
        if k == 5:
            return Regime.MULTI_5
        if k <= 3:
            return Regime.MULTI_LOW
        if k == 6:
            raise UnsupportedRegimeError(
                "6-regular multigraphs with deficiency at least 2 have no certified construction",
                {"k": k, "deficiency": ge.deficiency},
            )
        return Regime.MULTI_HIGH

    def run_pipeline(
        self,
        graph: Multigraph,
        k: int,
        ge: GallaiEdmonds,
        regime: Regime,
    ) -> ConstructionReport:
        """Run the pipeline registered for ``regime`` and certify the result."""
        pipeline = self.PIPELINE_CLASS_MAP[regime](graph, ge, k)
        plan = pipeline.plan()
        matching = assemble(graph, ge, plan)
        report = self._finish(graph, k, ge, regime, matching, plan, pipeline)
        if regime == Regime.MULTI_5:
            self._check_five_regular_structure(graph, ge, plan, report, pipeline)
        return report

    def _construct_low_degree(
        self, graph: Multigraph, k: int, ge: GallaiEdmonds
    ) -> ConstructionReport:
        try:
            return self.run_pipeline(graph, k, ge, Regime.MULTI_LOW)
        except TheoryViolationError as exc:
            failure = exc
        if graph.n > self.config.oracle_fallback_max_n:
            raise UnsupportedRegimeError(
                f"low-degree pipeline failed and n = {graph.n} is beyond the oracle fallback",
                {"k": k, "attempt": failure.message, "witness": failure.witness},
            )
        logger.info("low-degree pipeline failed (%s); falling back to the oracle", failure.message)
        try:
            verdict = exists_good_maximum_matching(
                graph, edge_budget=self.config.enumeration_edge_budget
            )
        except BudgetExceededError as exc:
            raise UnsupportedRegimeError(
                "low-degree pipeline failed and the oracle is over budget",
                {"k": k, "attempt": failure.message, "budget": exc.witness},
            )
        if verdict.witness is None:
            raise TheoryViolationError(
                "no maximum matching avoids shared neighbors",
                {"k": k, "maximum_matchings": verdict.maximum_matching_count},
            )
        return self._finish(graph, k, ge, Regime.ORACLE, verdict.witness, None, None)

    def _attempt_high_degree(self, graph: Multigraph, k: int, ge: GallaiEdmonds) -> None:
        try:
            report = self.run_pipeline(graph, k, ge, Regime.SIMPLE)
            outcome = {"attempt": "succeeded", "matching": report.matching.sorted_pairs()}
        except RegMatchError as exc:
            outcome = {"attempt": "failed", "reason": exc.message}
        raise UnsupportedRegimeError(
            f"{k}-regular multigraphs have no certified construction; "
            "a failed attempt does not mean no good matching exists",
            {"k": k, "deficiency": ge.deficiency, **outcome},
        )

    def _finish(
        self,
        graph: Multigraph,
        k: int,
        ge: GallaiEdmonds,
        regime: Regime,
        matching: Matching,
        plan: Optional[ConstructionPlan],
        pipeline: Optional[BasePipeline],
    ) -> ConstructionReport:
        bare = matching.unsaturated()
        if len(bare) != ge.deficiency:
            raise TheoryViolationError(
                f"{len(bare)} unsaturated vertices, deficiency is {ge.deficiency}",
                {"unsaturated": list(bare)},
            )
        checked = verify(graph, matching)
        if not checked.property_holds:
            raise TheoryViolationError(
                "constructed matching fails the property check",
                {
                    "matching": matching.sorted_pairs(),
                    "is_maximum": checked.is_maximum,
                    "shared_neighbor": checked.shared_neighbor,
                },
            )
        if plan is not None and any(matching.covers(x) for x in plan.X):
            raise TheoryViolationError("a designated bare vertex is covered", {"X": list(plan.X)})
        return ConstructionReport(
            matching=matching,
            unsaturated=bare,
            property_holds=True,
            regime=regime,
            k=k,
            decomposition=ge,
            components=pipeline.describe(plan) if pipeline is not None and plan is not None else [],
            plan=plan,
        )

    @staticmethod
    def _check_five_regular_structure(
        graph: Multigraph,
        ge: GallaiEdmonds,
        plan: ConstructionPlan,
        report: ConstructionReport,
        pipeline: BasePipeline,
    ) -> None:
        for v in report.unsaturated:
            index = ge.component_index(v)
            component = ge.components[index]
            if v in good_vertices(graph, component):
                continue
            q = pipeline.host.q(index)
            aux = plan.h_matching_aux
            if (
                len(component) != 3
                or pipeline.host.degree(q) != 3
                or aux is None
                or not aux.covers(q)
            ):
                raise TheoryViolationError(
                    f"bare vertex {v} is neither good nor in an M'-covered triangle",
                    {"vertex": v, "component": list(component)},
                )


def construct(graph: Multigraph, config: Optional[RunConfig] = None) -> ConstructionReport:
    """Good maximum matching of a regular graph; see ``ConstructionEngine.construct``."""
    return ConstructionEngine(config).construct(graph)


def _require_regime(graph: Multigraph, k: int, simple: Optional[bool] = None) -> GallaiEdmonds:
    profile = degree_profile(graph)
    if profile.regular_k != k:
        raise NotRegularError(f"graph is not {k}-regular")
    if simple and not graph.is_simple:
        raise ContractViolationError("graph has parallel edges")
    ge = decompose(graph)
    if ge.deficiency < 2:
        raise ContractViolationError(
            f"deficiency {ge.deficiency} < 2: any maximum matching is good; use construct"
        )
    return ge


def construct_simple(graph: Multigraph, k: int) -> ConstructionReport:
    """Simple k-regular graphs with deficiency at least 2."""
    ge = _require_regime(graph, k, simple=True)
    return ConstructionEngine().run_pipeline(graph, k, ge, Regime.SIMPLE)


def construct_4regular(graph: Multigraph) -> ConstructionReport:
    """4-regular multigraphs with deficiency at least 2."""
    ge = _require_regime(graph, 4)
    return ConstructionEngine().run_pipeline(graph, 4, ge, Regime.MULTI_4)


def construct_5regular(graph: Multigraph) -> ConstructionReport:
    """5-regular multigraphs with deficiency at least 2."""
    ge = _require_regime(graph, 5)
    return ConstructionEngine().run_pipeline(graph, 5, ge, Regime.MULTI_5)


__all__ = [
    "ConstructionEngine",
    "assemble",
    "construct",
    "construct_4regular",
    "construct_5regular",
    "construct_simple",
    "find_shared_neighbor",
    "verify",
    "verify_property",
]
