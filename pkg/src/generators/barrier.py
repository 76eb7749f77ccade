"""Regular (multi)graphs whose hubs form a barrier with deficiency at least two.

A set of ``hubs`` vertices is joined to odd gadgets only, with more gadgets
than hubs plus one. Deleting the hubs leaves every gadget as an odd
component, so any maximum matching misses at least two vertices.
"""

import logging
import random
from collections import Counter
from typing import Dict, List, NamedTuple, Tuple

from ..errors import InfeasibleError, RetryExhaustedError
from ..models.graph import Multigraph
from .random_regular import DEFAULT_RETRY_BUDGET

logger = logging.getLogger(__name__)


class Gadget(NamedTuple):
    """Odd connected piece: local edge records and hub edges owed per vertex."""

    order: int
    records: Tuple[Tuple[int, int, int], ...]
    ports: Tuple[int, ...]

    @property
    def external(self) -> int:
        return sum(self.ports)


def _gadget(order: int, records: List[Tuple[int, int, int]], k: int) -> Gadget:
    degree = [0] * order
    for u, v, m in records:
        degree[u] += m
        degree[v] += m
    return Gadget(order, tuple(records), tuple(k - d for d in degree))


def _near_complete(k: int) -> Gadget:
    """K_{k+1} minus an edge for even k; K_{k+2} minus a P3 and a matching for odd k."""
    if k % 2 == 0:
        order = k + 1
        removed = {(0, 1)}
    else:
        order = k + 2
        removed = {(0, 2), (1, 2)} | {(i, i + 1) for i in range(3, order, 2)}
    records = [
        (u, v, 1) for u in range(order) for v in range(u + 1, order) if (u, v) not in removed
    ]
    return _gadget(order, records, k)


def _doubled_triangle(k: int) -> Gadget:
    """Triangle with multiplicities chosen to leave one or two hub edges per corner."""
    if k == 3:
        return _gadget(3, [(0, 1, 2), (0, 2, 1), (1, 2, 1)], k)
    if k == 4:
        return _gadget(3, [(0, 1, 2), (0, 2, 2), (1, 2, 1)], k)
    return _gadget(3, [(0, 1, 2), (0, 2, 2), (1, 2, 2)], k)


def _doubled_k5() -> Gadget:
    """K5 with two disjoint doubled edges; the fifth vertex owes one hub edge."""
    records = [
        (i, j, 2 if (i, j) in ((0, 1), (2, 3)) else 1) for i in range(5) for j in range(i + 1, 5)
    ]
    return _gadget(5, records, 5)


def gadget_library(k: int, simple: bool, hubs: int) -> List[Gadget]:
    """Gadgets usable for degree k; a singleton needs k distinct hubs when simple."""
    library = [_near_complete(k)]
    if not simple:
        if 3 <= k <= 5:
            library.append(_doubled_triangle(k))
        if k == 5:
            library.append(_doubled_k5())
    if not simple or hubs >= k:
        library.append(Gadget(1, (), (k,)))
    return library


def _check_barrier_feasible(k: int, hubs: int) -> None:
    if k < 1 or hubs < 1:
        raise InfeasibleError(f"k and hubs must be positive (got k={k}, hubs={hubs})")
    smallest = 2 if k % 2 == 0 else 1
    if hubs * k // smallest < hubs + 2:
        raise InfeasibleError(
            f"{hubs} hubs of degree {k} cannot meet {hubs + 2} odd gadgets"
        )


def _draw_gadgets(rng: random.Random, library: List[Gadget], demand: int) -> List[Gadget]:
    chosen: List[Gadget] = []
    while demand:
        options = [g for g in library if g.external <= demand]
        gadget = rng.choice(options)
        chosen.append(gadget)
        demand -= gadget.external
    return chosen


def gen_barrier_regular(
    k: int,
    hubs: int,
    simple: bool = True,
    seed: int = 0,
    retry_budget: int = DEFAULT_RETRY_BUDGET,
) -> Multigraph:
    """Draw a k-regular graph with deficiency at least two.

    Gadgets are drawn until their owed hub edges add up to ``hubs * k``; the
    draw is kept when there are at least ``hubs + 2`` of them and, for simple
    graphs, when no hub meets a gadget vertex twice. Vertex labels are
    shuffled before returning.

    Raises:
        InfeasibleError: No gadget mix reaches ``hubs + 2`` components.
        RetryExhaustedError: Every draw was rejected.
    """
    _check_barrier_feasible(k, hubs)
    library = gadget_library(k, simple, hubs)
    rng = random.Random(seed)
    for attempt in range(retry_budget):
        gadgets = _draw_gadgets(rng, library, hubs * k)
        if len(gadgets) < hubs + 2:
            continue
        counts: Dict[Tuple[int, int], int] = Counter()
        stubs: List[int] = []
        offset = hubs
        for gadget in gadgets:
            for u, v, m in gadget.records:
                counts[offset + u, offset + v] += m
            for local, owed in enumerate(gadget.ports):
                stubs.extend([offset + local] * owed)
            offset += gadget.order
        rng.shuffle(stubs)
        for position, vertex in enumerate(stubs):
            counts[position // k, vertex] += 1
        if simple and any(m > 1 for m in counts.values()):
            continue
        labels = list(range(offset))
        rng.shuffle(labels)
        records = [(labels[u], labels[v], m) for (u, v), m in sorted(counts.items())]
        logger.debug(
            "barrier graph: k=%d hubs=%d gadgets=%d after %d attempts",
            k,
            hubs,
            len(gadgets),
            attempt + 1,
        )
        return Multigraph.from_edges(offset, records)
    raise RetryExhaustedError(
        f"no barrier graph with k={k} and {hubs} hubs among {retry_budget} draws",
        {"k": k, "hubs": hubs, "budget": retry_budget},
    )
