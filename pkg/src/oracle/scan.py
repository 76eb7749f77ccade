"""Conjecture-testing harness over exhaustive and random regular graph families."""

import logging
import random
from typing import Dict, Iterable, List, Optional, Tuple

from joblib import Parallel, delayed

from ..constructor.engine import construct, verify_property
from ..errors import (
    BudgetExceededError,
    ContractViolationError,
    InfeasibleError,
    InputError,
    TheoryViolationError,
    UnsupportedRegimeError,
)
from ..generators.barrier import gen_barrier_regular
from ..generators.enumeration import enumerate_regular, regular_orders
from ..generators.random_regular import gen_random_regular
from ..matching.blossom import matching_number
from ..models.graph import Multigraph
from ..models.report import RunConfig, ScanRecord, ScanSummary
from ..parsers.mel import serialize_mel
from .brute_force import exists_good_maximum_matching

logger = logging.getLogger(__name__)

EXHAUSTIVE_MAX_N = 10

ScanResult = Tuple[List[ScanRecord], ScanSummary]


def scan_graph(index: int, graph: Multigraph, config: RunConfig) -> ScanRecord:
    """Cross-check the engine, the oracle and the construction on one graph.

    The oracle is skipped when the graph is over the enumeration budget; the
    construction is still Berge-verified.
    """
    k = graph.degree(0) if graph.n else 0
    nu = matching_number(graph)
    discrepancies: List[str] = []

    oracle_nu: Optional[int] = None
    good_exists: Optional[bool] = None
    try:
        verdict = exists_good_maximum_matching(graph, edge_budget=config.enumeration_edge_budget)
        oracle_nu, good_exists = verdict.nu, verdict.good_exists
        if verdict.nu != nu:
            discrepancies.append(f"nu mismatch: engine {nu}, oracle {verdict.nu}")
    except BudgetExceededError:
        logger.debug("graph %d is over the oracle budget", index)

    regime: Optional[str]
    construct_property: Optional[bool] = None
    try:
        report = construct(graph, config)
        regime = report.regime.value
        construct_property = verify_property(graph, report.matching)
        if not construct_property:
            discrepancies.append("constructed matching fails the property")
    except UnsupportedRegimeError:
        regime = "unsupported"
    except TheoryViolationError as exc:
        regime = "error"
        discrepancies.append(f"theory violation: {exc.message}")
    except ContractViolationError as exc:
        regime = "error"
        discrepancies.append(f"contract violation: {exc.message}")

    if good_exists is False and regime not in ("unsupported", None):
        discrepancies.append("oracle finds no good maximum matching")

    return ScanRecord(
        index=index,
        n=graph.n,
        k=k,
        simple=graph.is_simple,
        mel=serialize_mel(graph),
        nu=nu,
        oracle_nu=oracle_nu,
        good_exists=good_exists,
        regime=regime,
        construct_property=construct_property,
        discrepancies=discrepancies,
    )


def _run(graphs: Iterable[Multigraph], config: RunConfig) -> List[ScanRecord]:
    """Scan records in input order; ``scan_workers`` > 1 fans out over joblib processes."""
    indexed = list(enumerate(graphs))
    if config.scan_workers > 1 and len(indexed) > 1:
        return Parallel(n_jobs=config.scan_workers)(
            delayed(scan_graph)(index, graph, config) for index, graph in indexed
        )
    return [scan_graph(index, graph, config) for index, graph in indexed]


def _summarize(
    mode: str, k: int, simple: bool, n_max: int, records: List[ScanRecord]
) -> ScanSummary:
    regimes: Dict[str, int] = {}
    for record in records:
        key = record.regime or "none"
        regimes[key] = regimes.get(key, 0) + 1
    return ScanSummary(
        mode=mode,
        k=k,
        simple=simple,
        n_max=n_max,
        total=len(records),
        discrepancy_count=sum(1 for record in records if record.discrepancies),
        regimes=dict(sorted(regimes.items())),
    )


def exhaustive_regular_scan(
    n_max: int,
    k: int,
    simple: bool = True,
    config: Optional[RunConfig] = None,
) -> ScanResult:
    """Scan every k-regular graph on at most ``n_max`` vertices.

    Args:
        n_max: Largest order, at most 10.
        k: Degree.
        simple: Restrict to simple graphs.
        config: Run configuration.

    Returns:
        (records ordered by index, summary).

    Raises:
        ContractViolationError: ``n_max`` is above 10.
    """
    config = config or RunConfig()
    if n_max > EXHAUSTIVE_MAX_N:
        raise ContractViolationError(
            f"exhaustive scans stop at n = {EXHAUSTIVE_MAX_N}; use the random mode beyond"
        )
    graphs: List[Multigraph] = []
    for n in regular_orders(n_max, k, simple):
        graphs.extend(enumerate_regular(n, k, simple=simple, dedupe=config.dedupe_isomorphs))
    logger.info("exhaustive scan: %d graphs (k=%d, simple=%s)", len(graphs), k, simple)
    records = _run(graphs, config)
    return records, _summarize("exhaustive", k, simple, n_max, records)


def random_scan(
    trials: int,
    n_max: Optional[int],
    k: int,
    simple: bool = True,
    seed: int = 0,
    config: Optional[RunConfig] = None,
    hubs: Optional[int] = None,
) -> ScanResult:
    """Scan ``trials`` random k-regular graphs.

    Without ``hubs`` the orders are drawn from the feasible ones up to
    ``n_max``. With ``hubs`` every graph comes from the barrier generator and
    has deficiency at least two; ``n_max`` is then ignored and the summary
    reports the largest order drawn.

    Raises:
        InputError: Neither ``n_max`` nor ``hubs`` is given.
        InfeasibleError: No order up to ``n_max`` admits a k-regular graph, or
            no barrier with ``hubs`` hubs exists for degree k.
        RetryExhaustedError: A draw ran out of attempts.
    """
    config = config or RunConfig()
    rng = random.Random(seed)
    graphs: List[Multigraph] = []
    if hubs is not None:
        for _ in range(trials):
            graphs.append(
                gen_barrier_regular(
                    k,
                    hubs,
                    simple=simple,
                    seed=rng.randrange(2**32),
                    retry_budget=config.generator_retry_budget,
                )
            )
        n_max = max((graph.n for graph in graphs), default=0)
    else:
        if n_max is None:
            raise InputError("random scans need n_max unless hubs is given")
        orders = regular_orders(n_max, k, simple)
        if not orders:
            raise InfeasibleError(f"no {k}-regular graph has at most {n_max} vertices")
        for _ in range(trials):
            n = rng.choice(orders)
            graphs.append(
                gen_random_regular(
                    n,
                    k,
                    simple=simple,
                    seed=rng.randrange(2**32),
                    retry_budget=config.generator_retry_budget,
                )
            )
    logger.info(
        "random scan: %d graphs (k=%d, simple=%s, hubs=%s, seed=%d)",
        trials,
        k,
        simple,
        hubs,
        seed,
    )
    records = _run(graphs, config)
    return records, _summarize("random", k, simple, n_max, records)
