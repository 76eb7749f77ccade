"""Seeded random regular (multi)graphs."""

import logging
import random

import networkx as nx

from ..errors import InfeasibleError, RetryExhaustedError
from ..models.graph import Multigraph

logger = logging.getLogger(__name__)

DEFAULT_RETRY_BUDGET = 10000


def check_feasible(n: int, k: int, simple: bool) -> None:
    """Raise InfeasibleError when no k-regular graph on n vertices exists."""
    if n < 0 or k < 0:
        raise InfeasibleError(f"n and k must be non-negative (got n={n}, k={k})")
    if (n * k) % 2:
        raise InfeasibleError(f"n*k = {n * k} is odd: no {k}-regular graph on {n} vertices")
    if k > 0 and simple and k >= n:
        raise InfeasibleError(f"a simple {k}-regular graph needs more than {k} vertices")
    if k > 0 and n < 2:
        raise InfeasibleError(f"a loopless {k}-regular graph needs at least 2 vertices")


def gen_random_regular(
    n: int,
    k: int,
    simple: bool = True,
    seed: int = 0,
    retry_budget: int = DEFAULT_RETRY_BUDGET,
) -> Multigraph:
    """Draw a k-regular graph on n vertices.

    Simple graphs come from networkx's pairing sampler. Multigraphs come from
    the configuration model with loops rejected and resampled; parallel edges
    are kept as multiplicities.

    Args:
        n: Vertex count.
        k: Degree.
        simple: Forbid parallel edges.
        seed: Seed of the private random stream.
        retry_budget: Configuration-model draws allowed before giving up.
            Multigraphs only: networkx retries simple draws internally
            without a cap, so a simple draw never raises RetryExhaustedError.

    Returns:
        A k-regular Multigraph, identical for identical arguments.

    Raises:
        InfeasibleError: n*k is odd, or k >= n for simple graphs.
        RetryExhaustedError: Every configuration-model draw had a loop
            (multigraphs only).
    """
    check_feasible(n, k, simple)
    rng = random.Random(seed)
    if simple:
        # retry_budget does not apply here
        return Multigraph.from_networkx(nx.random_regular_graph(k, n, seed=rng))

    for attempt in range(retry_budget):
        drawn = nx.configuration_model([k] * n, seed=rng)
        if nx.number_of_selfloops(drawn) == 0:
            logger.debug("multigraph accepted after %d rejected draws", attempt)
            return Multigraph.from_networkx(drawn)
    raise RetryExhaustedError(
        f"no loopless draw among {retry_budget} configuration-model samples",
        {"n": n, "k": k, "seed": seed, "retry_budget": retry_budget},
    )
