"""Gallai-Edmonds partition, factor-critical certificates and the contracted graph H."""

import logging
from typing import Iterable, List, Optional

import networkx as nx

from ..errors import ContractViolationError, FactorCriticalityError, TheoryViolationError
from ..matching.blossom import UNMATCHED, BlossomMatcher, perfect_matching
from ..models.graph import Multigraph, VertexSet, degree_profile, vertex_set
from ..models.structure import ContractedBipartite, GallaiEdmonds

logger = logging.getLogger(__name__)


def _missable(graph: Multigraph, matcher: BlossomMatcher, v: int) -> bool:
    """True iff some maximum matching misses v, i.e. nu(G - v) = nu(G)."""
    partner = matcher.mate[matcher.vertices.index(v)]
    if partner == UNMATCHED:
        return True
    rest = [(u, w) for u, w in matcher.pairs() if v not in (u, w)]
    reduced = BlossomMatcher(graph, (w for w in matcher.vertices if w != v))
    reduced.load(rest)
    return reduced.augment_from(reduced.vertices.index(matcher.vertices[partner]))


def decompose(graph: Multigraph) -> GallaiEdmonds:
    """Compute (D, A, C) and the components of G[D].

    D is found with one matching run per vertex: v is in D iff nu(G - v) = nu(G).
    Removing a matched v from a maximum matching leaves its partner exposed,
    and nu(G - v) = nu(G) iff that partner can be augmented from.

    Raises:
        TheoryViolationError: A structural fact of the decomposition fails.
    """
    matcher = BlossomMatcher(graph)
    matcher.run()
    nu = matcher.size()

    D = vertex_set(v for v in range(graph.n) if _missable(graph, matcher, v))
    d_set = set(D)
    A = vertex_set(w for w in graph.neighborhood(D) if w not in d_set)
    a_set = set(A)
    C = vertex_set(v for v in range(graph.n) if v not in d_set and v not in a_set)

    support = graph.to_networkx().subgraph(D)
    raw_components = [vertex_set(c) for c in nx.connected_components(support)]
    counted = [(graph.edges_between(q, A), q) for q in raw_components]
    counted.sort(key=lambda item: (-item[0], item[1][0]))

    ge = GallaiEdmonds(
        n=graph.n,
        nu=nu,
        D=D,
        A=A,
        C=C,
        components=tuple(q for _, q in counted),
        edge_counts=tuple(count for count, _ in counted),
    )
    logger.debug(
        "decomposed n=%d: nu=%d |D|=%d |A|=%d |C|=%d c(D)=%d",
        graph.n,
        nu,
        len(D),
        len(A),
        len(C),
        ge.component_count,
    )
    check_decomposition(graph, ge)
    return ge


def check_decomposition(graph: Multigraph, ge: GallaiEdmonds) -> None:
    """Assert the structure theorem facts on a computed decomposition.

    Raises:
        FactorCriticalityError: Some component is not factor-critical.
        TheoryViolationError: G[C] has no perfect matching, the deficiency
            count is off, or a regular graph breaks the counting facts.
    """
    for index, component in enumerate(ge.components):
        if not certify_factor_critical(graph, component):
            raise FactorCriticalityError(
                f"component {index} is not factor-critical",
                {"component": list(component)},
            )
    if perfect_matching(graph, ge.C) is None:
        raise TheoryViolationError("G[C] has no perfect matching", {"C": list(ge.C)})
    if ge.component_count - len(ge.A) != ge.deficiency:
        raise TheoryViolationError(
            "c(D) - |A| differs from the deficiency",
            {"c(D)": ge.component_count, "|A|": len(ge.A), "deficiency": ge.deficiency},
        )

    k = degree_profile(graph).regular_k
    if k is None or ge.deficiency < 2:
        return
    if ge.component_count < len(ge.A) + 2:
        raise TheoryViolationError(
            "c(D) < |A| + 2 although the deficiency is at least 2",
            {"c(D)": ge.component_count, "|A|": len(ge.A)},
        )
    for index, count in enumerate(ge.edge_counts):
        if count % 2 != k % 2:
            raise TheoryViolationError(
                f"|[Q_{index}, A]| = {count} has the wrong parity for k = {k}",
                {"component": list(ge.components[index]), "edges_to_a": count, "k": k},
            )


def certify_factor_critical(graph: Multigraph, within: Optional[Iterable[int]] = None) -> bool:
    """True iff Q - v has a perfect matching for every v of Q.

    Q is ``graph`` or, when ``within`` is given, its induced subgraph on those vertices.
    """
    component = vertex_set(within) if within is not None else tuple(range(graph.n))
    if len(component) % 2 == 0:
        return False
    return all(
        perfect_matching(graph, (w for w in component if w != v)) is not None
        for v in component
    )


def good_vertices(graph: Multigraph, component: Iterable[int]) -> VertexSet:
    """Vertices of the component all of whose neighbors lie inside it."""
    members = set(component)
    return vertex_set(
        v for v in members if all(w in members for w in graph.neighbors(v))
    )


def contract(graph: Multigraph, ge: GallaiEdmonds, k: int) -> ContractedBipartite:
    """Shrink every component of G[D] to a vertex and keep only [D, A] edges.

    Raises:
        ContractViolationError: The graph is not k-regular.
        TheoryViolationError: Every contracted vertex lands in W.
    """
    if degree_profile(graph).regular_k != k:
        raise ContractViolationError(f"contract requires a {k}-regular graph")

    a_local = {a: i for i, a in enumerate(ge.A)}
    offset = len(ge.A)
    records: List[tuple] = []
    for index, component in enumerate(ge.components):
        per_a = {}
        for v in component:
            for w, m in graph.adjacency(v):
                if w in a_local:
                    per_a[w] = per_a.get(w, 0) + m
        records.extend((a_local[a], offset + index, m) for a, m in per_a.items())

    h_graph = Multigraph.from_edges(offset + ge.component_count, records)
    right = tuple(range(offset, offset + ge.component_count))
    W = tuple(q for q in right if h_graph.degree(q) >= k)
    U = tuple(q for q in right if h_graph.degree(q) == 3) if k == 5 else ()

    if right and len(W) == len(right):
        raise TheoryViolationError(
            "every contracted component has at least k edges into A",
            {"edge_counts": list(ge.edge_counts), "|A|": len(ge.A), "k": k},
        )

    return ContractedBipartite(
        graph=h_graph,
        left=tuple(range(offset)),
        right=right,
        k=k,
        a_vertices=ge.A,
        components=ge.components,
        W=W,
        U=U,
    )
