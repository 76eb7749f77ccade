"""W-saturating matchings, {P2, P3}-packings, their refinement and the packing split.

All routines take the contracted bipartite graph H with A on the left. Degree
bounds are checked up front; when one fails the routine still runs, and a
later failure is reported as a precondition violation instead of a theory
violation.
"""

import logging
from collections import deque
from typing import Dict, FrozenSet, Iterable, List, Optional, Tuple

from ..errors import ContractViolationError, TheoryViolationError
from ..matching.bipartite import hall_violator, hopcroft_karp, inessential_left_vertices
from ..matching.blossom import maximum_matching
from ..models.graph import BipartiteGraph, Matching, vertex_set
from ..models.structure import Packing
from .orientation import OrientationState

logger = logging.getLogger(__name__)


def _right_subset(host: BipartiteGraph, vertices: Iterable[int], name: str) -> FrozenSet[int]:
    chosen = frozenset(vertices)
    for v in chosen:
        if not 0 <= v < host.graph.n or host.is_left(v):
            raise ContractViolationError(f"{name} must be a subset of the B side; {v} is not")
    return chosen


def _require_left_covered(host: BipartiteGraph) -> None:
    missed = inessential_left_vertices(host)
    if missed:
        raise ContractViolationError(
            "some maximum matching of H leaves A vertices uncovered",
            {"missed": missed},
        )


def _bounds(host: BipartiteGraph, *groups: FrozenSet[int]) -> List[Tuple[float, float]]:
    """(min degree, max degree) per group, with +inf / -inf for empty groups."""
    result = []
    for group in groups:
        low = host.min_degree(group)
        high = host.max_degree(group)
        result.append(
            (float("inf") if low is None else low, float("-inf") if high is None else high)
        )
    return result


def _precondition(holds: bool, step: str, detail: str) -> bool:
    if not holds:
        logger.warning("%s: degree precondition %s does not hold; proceeding", step, detail)
    return holds


def _failure(degree_ok: bool, message: str, witness: Dict) -> Exception:
    if degree_ok:
        return TheoryViolationError(message, witness)
    return ContractViolationError(f"{message} (degree precondition was violated)", witness)


def saturate_W(host: BipartiteGraph, W: Iterable[int]) -> Matching:
    """Maximum matching of H covering every vertex of W and of A.

    W is first saturated by Hopcroft-Karp on the W-side alone; the result then
    seeds a blossom run to maximum size, which never unsaturates a vertex.

    Args:
        host: Bipartite graph whose maximum matchings all cover A.
        W: B-side vertices to saturate; delta(W) >= Delta(A) is expected.

    Returns:
        Maximum matching covering A and W.

    Raises:
        ContractViolationError: A is not covered by every maximum matching, or
            W is not saturable and the degree bound did not hold.
        TheoryViolationError: Hall's condition fails although the degree bound held.
    """
    w_set = _right_subset(host, W, "W")
    (_, delta_a), (low_w, _) = _bounds(host, frozenset(host.left), w_set)
    degree_ok = _precondition(low_w >= delta_a, "saturate_W", "delta(W) >= Delta(A)")
    _require_left_covered(host)

    ordered = sorted(w_set)
    partial = hopcroft_karp({w: list(host.neighbors(w)) for w in ordered})
    if len(partial) < len(ordered):
        hall_set, neighborhood = hall_violator(host, ordered, partial)
        raise _failure(
            degree_ok,
            "Hall's condition fails on W",
            {"hall_set": list(hall_set), "neighborhood": list(neighborhood)},
        )

    seed = Matching.of(host.graph, partial.items())
    result = maximum_matching(host.graph, initial=seed)
    uncovered = [v for v in list(host.left) + ordered if not result.covers(v)]
    if uncovered:
        raise TheoryViolationError(
            "maximum matching grown from a W-saturating seed misses A or W",
            {"uncovered": uncovered},
        )
    logger.debug("saturated |W|=%d with a matching of size %d", len(ordered), len(result))
    return result


def _grow_packing(host: BipartiteGraph, W: FrozenSet[int], degree_ok: bool) -> OrientationState:
    """Grow an A-covering all-P2 packing until it covers W as well."""
    state = OrientationState.from_matching(host, maximum_matching(host.graph))
    for x in sorted(W):
        if state.is_covered(x):
            continue
        extendable = [a for a in host.neighbors(x) if state.s_degree(a) == 1]
        if extendable:
            state.flip([x, extendable[0]])
            logger.debug("extended the P2 at %d with %d", extendable[0], x)
            continue
        parent = state.reach(x)
        sink = next(
            (
                v
                for v in parent
                if v != x
                and (
                    (host.is_left(v) and state.s_degree(v) < 2)
                    or (not host.is_left(v) and v not in W)
                )
            ),
            None,
        )
        if sink is None:
            raise _failure(
                degree_ok, f"no exchange path covers {x}", _reach_witness(host, W, parent)
            )
        path = state.path_to(parent, sink)
        state.flip(path)
        logger.debug("covered %d along %s", x, path)
    return state


def _reach_witness(
    host: BipartiteGraph,
    W: FrozenSet[int],
    parent: Dict[int, Optional[int]],
) -> Dict:
    a_side = sorted(v for v in parent if host.is_left(v))
    b_side = sorted(v for v in parent if not host.is_left(v))
    low_w = host.min_degree(b_side) or 0
    high_a = host.max_degree(host.left) or 0
    return {
        "A_x": a_side,
        "B_x": b_side,
        "all_reached_b_in_W": all(b in W for b in b_side),
        "identity_2A_eq_B_minus_1": 2 * len(a_side) == len(b_side) - 1,
        "degree_inequality_holds": low_w * len(b_side) <= high_a * len(a_side),
    }


def _check_packing(packing: Packing, required: Iterable[int], step: str) -> None:
    covered = packing.covered()
    missing = [v for v in list(packing.host.left) + sorted(required) if v not in covered]
    if missing:
        raise TheoryViolationError(f"{step} output misses {missing}", {"missing": missing})


def p2p3_packing(host: BipartiteGraph, W: Iterable[int]) -> Packing:
    """{P2, P3}-packing covering A and W with S-degree at most one on B.

    Starting from a maximum matching, each uncovered x in W either extends a
    neighboring P2 into a P3 or is covered by flipping S along a directed
    path from x to an A vertex of S-degree one or to a B vertex outside W.

    Raises:
        ContractViolationError: A precondition fails.
        TheoryViolationError: No exchange path exists although Delta(A) <= 2 delta(W).
    """
    w_set = _right_subset(host, W, "W")
    (_, delta_a), (low_w, _) = _bounds(host, frozenset(host.left), w_set)
    degree_ok = _precondition(delta_a <= 2 * low_w, "p2p3_packing", "Delta(A) <= 2 delta(W)")
    _require_left_covered(host)

    packing = _grow_packing(host, w_set, degree_ok).to_packing()
    _check_packing(packing, w_set, "p2p3_packing")
    return packing


def _is_candidate(state: OrientationState, v: int, W: FrozenSet[int], U: FrozenSet[int]) -> bool:
    return not state.host.is_left(v) and v not in W and (v not in U or state.in_p2(v))


def _exchange_paths(
    state: OrientationState,
    W: FrozenSet[int],
    U: FrozenSet[int],
) -> List[List[int]]:
    """Directed paths from two-W P3 centers to candidate sinks, shortest first.

    Ties keep the lower center first, then BFS order from that center.
    """
    paths = []
    for y in state.two_w_centers(W):
        parent = state.reach(y)
        paths.extend(
            state.path_to(parent, v) for v in parent if _is_candidate(state, v, W, U)
        )
    paths.sort(key=len)
    return paths


def _exchange_measure(
    state: OrientationState,
    W: FrozenSet[int],
    U: FrozenSet[int],
) -> Tuple[int, int, int]:
    """(two-W components, one-W P3 components, shortest exchange path length).

    A state with two-W components but no exchange path gets a length beyond
    any real path.
    """
    two_w = len(state.two_w_centers(W))
    if not two_w:
        return (0, state.one_w_p3_count(W), 0)
    paths = _exchange_paths(state, W, U)
    shortest = len(paths[0]) if paths else state.host.graph.n + 1
    return (two_w, state.one_w_p3_count(W), shortest)


def _exchange_along(
    state: OrientationState,
    path: List[int],
    W: FrozenSet[int],
    U: FrozenSet[int],
) -> Optional[OrientationState]:
    """Flip S along ``path`` or along its tail from the last W-carrying P3.

    If some P3 on the path other than the first carries a W vertex, only the
    part from the center nearest the sink onward is flipped. The sink is
    left out of the flip when it lies in U.
    """
    segment = path
    for j in range(len(path) - 2, 1, -2):
        leaves = state.leaves[path[j]]
        if len(leaves) == 2 and any(b in W for b in leaves):
            segment = path[j:]
            exit_leaf = path[j + 1]
            other = leaves[0] if leaves[1] == exit_leaf else leaves[1]
            if other in W and exit_leaf in W:
                case = "two-W segment"
            elif exit_leaf in W:
                case = "segment through w"
            else:
                case = "segment through w'"
            logger.debug("exchange on %s from center %d (%s)", segment, path[j], case)
            break
    else:
        logger.debug("exchange on full path %s", path)

    flip = segment if path[-1] not in U else segment[:-1]
    try:
        return state.flipped(flip)
    except TheoryViolationError:
        return None


def _claim_step(
    state: OrientationState,
    W: FrozenSet[int],
    U: FrozenSet[int],
) -> Optional[OrientationState]:
    """The exchange along the shortest path from a two-W center to a sink.

    A sink is a B vertex outside W that is outside U or sits in a P2.
    """
    paths = _exchange_paths(state, W, U)
    if not paths:
        return None
    return _exchange_along(state, paths[0], W, U)


def _constrained_step(
    state: OrientationState,
    W: FrozenSet[int],
    U: FrozenSet[int],
) -> Optional[OrientationState]:
    """Search for a flip that breaks a two-W P3 without creating another.

    The search walks the orientation from each two-W center, remembering
    whether the last B vertex was in W; an A vertex entered from W may not
    keep a W leaf. Sinks are B vertices outside W and U (dropped) and A
    vertices of S-degree one (extended).
    """
    before = len(state.two_w_centers(W))
    for y in state.two_w_centers(W):
        start = (y, False)
        parent: Dict[Tuple[int, bool], Optional[Tuple[int, bool]]] = {start: None}
        queue = deque([start])
        while queue:
            node = queue.popleft()
            v, from_w = node
            if state.host.is_left(v):
                for leaf in state.leaves[v]:
                    kept = [b for b in state.leaves[v] if b != leaf]
                    if v != y and from_w and kept and kept[0] in W:
                        continue
                    child = (leaf, False)
                    if child in parent:
                        continue
                    parent[child] = node
                    if leaf not in W and leaf not in U:
                        result = _try_flip(state, parent, child, W, before)
                        if result is not None:
                            return result
                    queue.append(child)
            else:
                for a in state.out_neighbors(v):
                    child = (a, v in W)
                    if child in parent:
                        continue
                    parent[child] = node
                    leaves = state.leaves[a]
                    if len(leaves) == 1 and not (v in W and leaves[0] in W):
                        result = _try_flip(state, parent, child, W, before)
                        if result is not None:
                            return result
                    queue.append(child)
    return None


def _try_flip(
    state: OrientationState,
    parent: Dict,
    node: Tuple[int, bool],
    W: FrozenSet[int],
    before: int,
) -> Optional[OrientationState]:
    chain = []
    current: Optional[Tuple[int, bool]] = node
    while current is not None:
        chain.append(current[0])
        current = parent[current]
    chain.reverse()
    if len(set(chain)) != len(chain):
        return None
    try:
        result = state.flipped(chain)
    except TheoryViolationError:
        return None
    if len(result.two_w_centers(W)) >= before:
        return None
    logger.debug("constrained exchange on %s", chain)
    return result


def _stall_witness(state: OrientationState, W: FrozenSet[int], U: FrozenSet[int]) -> Dict:
    y = state.two_w_centers(W)[0]
    parent = state.reach(y)
    host = state.host
    a_side = sorted(v for v in parent if host.is_left(v))
    b_side = [v for v in parent if not host.is_left(v)]
    b1 = sorted(v for v in b_side if v not in W)
    b2 = sorted(v for v in b_side if v in W)
    degree_sum = sum(host.degree(v) for v in b_side)
    return {
        "center": y,
        "A_y": a_side,
        "B_1": b1,
        "B_2": b2,
        "B_1_in_U_and_P3": all(b in U and not state.in_p2(b) for b in b1),
        "count_bound_holds": len(a_side) <= len(b1) / 2 + len(b2) - 1,
        "degree_sum_B": degree_sum,
        "degree_cap_A": (host.max_degree(host.left) or 0) * len(a_side),
    }


def refined_packing(
    host: BipartiteGraph,
    W: Iterable[int],
    U: Iterable[int],
    start: Optional[Packing] = None,
) -> Packing:
    """{P2, P3}-packing covering A, W and U with no component holding two W vertices.

    Starts from ``start`` when given, else from a grown packing covering A and
    W | U, then removes two-W P3 components by exchanges. Each exchange must
    lower (two-W components, one-W P3 components, shortest exchange path)
    lexicographically. When none does and the constrained search fails too,
    the lowest unseen state with no more two-W components is taken instead.

    Raises:
        ContractViolationError: A precondition fails, or ``start`` does not
            cover A, W and U on this host.
        TheoryViolationError: A two-W component survives every exchange.
    """
    w_set = _right_subset(host, W, "W")
    u_set = _right_subset(host, U, "U")
    if w_set & u_set:
        raise ContractViolationError("W and U must be disjoint")
    (low_a, delta_a), (low_w, _), (low_u, delta_u) = _bounds(
        host, frozenset(host.left), w_set, u_set
    )
    degree_ok = _precondition(
        delta_u < delta_a <= min(low_w, 2 * low_u),
        "refined_packing",
        "Delta(U) < Delta(A) <= min(delta(W), 2 delta(U))",
    )
    _require_left_covered(host)

    if start is None:
        state = _grow_packing(host, w_set | u_set, degree_ok)
    else:
        if start.host != host:
            raise ContractViolationError("start packing lives on another host")
        missing = [
            v for v in list(host.left) + sorted(w_set | u_set) if v not in start.covered()
        ]
        if missing:
            raise ContractViolationError(
                f"start packing misses {missing}", {"missing": missing}
            )
        state = OrientationState.from_packing(start)

    measure = _exchange_measure(state, w_set, u_set)
    seen = {state.key()}
    exchanges = 0
    while measure[0]:
        accepted: Optional[OrientationState] = None
        unseen: Optional[Tuple[Tuple[int, int, int], OrientationState]] = None
        for path in _exchange_paths(state, w_set, u_set):
            candidate = _exchange_along(state, path, w_set, u_set)
            if candidate is None:
                continue
            after = _exchange_measure(candidate, w_set, u_set)
            if after < measure:
                accepted = candidate
                break
            if (
                after[0] <= measure[0]
                and candidate.key() not in seen
                and (unseen is None or after < unseen[0])
            ):
                unseen = (after, candidate)
        if accepted is None:
            accepted = _constrained_step(state, w_set, u_set)
        if accepted is None and unseen is not None:
            logger.debug("no exchange lowers %s; taking unseen %s", measure, unseen[0])
            accepted = unseen[1]
        if accepted is None:
            raise _failure(
                degree_ok,
                "a P3 with two W vertices cannot be exchanged away",
                _stall_witness(state, w_set, u_set),
            )
        after = _exchange_measure(accepted, w_set, u_set)
        if after[0] < measure[0]:
            seen = set()
        seen.add(accepted.key())
        state, measure = accepted, after
        exchanges += 1

    packing = state.to_packing()
    _check_packing(packing, w_set | u_set, "refined_packing")
    for component in packing.components:
        if sum(v in w_set for v in component) >= 2:
            raise TheoryViolationError(
                "refined packing kept a component with two W vertices",
                {"component": list(component)},
            )
    logger.debug("refined packing after %d exchanges: %s", exchanges, packing.components)
    return packing


def split_packing(packing: Packing, W: Iterable[int]) -> Tuple[Matching, Matching]:
    """Split a refined packing into M (P2s and W-side P3 edges) and M'.

    A P3 with no W leaf sends its lower B id to M.

    Raises:
        ContractViolationError: A P3 has both leaves in W, or A or W is left
            uncovered by M.
    """
    host = packing.host
    w_set = _right_subset(host, W, "W")
    primary, auxiliary = [], []
    for component in packing.components:
        if len(component) == 2:
            primary.append(component)
            continue
        low, center, high = component
        if low in w_set and high in w_set:
            raise ContractViolationError(
                f"P3 {component} has both ends in W",
                {"component": list(component)},
            )
        keep, spare = (high, low) if high in w_set else (low, high)
        primary.append((center, keep))
        auxiliary.append((center, spare))

    m = Matching.of(host.graph, primary)
    m_aux = Matching.of(host.graph, auxiliary)
    missing = [v for v in vertex_set(list(host.left) + list(w_set)) if not m.covers(v)]
    if missing:
        raise ContractViolationError(f"M misses {missing}", {"missing": missing})
    return m, m_aux
