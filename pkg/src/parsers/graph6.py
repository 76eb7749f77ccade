"""graph6 codec for simple graphs with at most 62 vertices."""

import math

import networkx as nx

from ..errors import ContractViolationError, GraphParseError
from ..models.graph import Multigraph

HEADER = b">>graph6<<"
MIN_BYTE = 63
MAX_BYTE = 126
MAX_ORDER = 62


def parse_graph6(text: str) -> Multigraph:
    """Decode one graph6 string into a simple multigraph.

    The order byte and every data byte are checked before decoding so that
    errors can name the offending byte offset.

    Args:
        text: graph6 text, optionally prefixed with the ``>>graph6<<`` header.

    Returns:
        Multigraph with every multiplicity equal to 1.

    Raises:
        GraphParseError: Malformed order byte, out-of-range data byte or wrong length.
    """
    stripped = text.strip()
    for position, char in enumerate(stripped):
        if ord(char) > MAX_BYTE:
            raise GraphParseError(f"non-graph6 character {char!r}", offset=position)
    data = stripped.encode("ascii")
    start = 0
    if data.startswith(HEADER):
        start = len(HEADER)
    body = data[start:]

    if not body:
        raise GraphParseError("empty graph6 string", offset=start)

    order = body[0]
    if order == MAX_BYTE:
        raise GraphParseError(f"graph6 orders above {MAX_ORDER} are not supported", offset=start)
    if not MIN_BYTE <= order < MAX_BYTE:
        raise GraphParseError(f"invalid graph6 order byte {order!r}", offset=start)
    n = order - MIN_BYTE

    expected = math.ceil(n * (n - 1) // 2 / 6)
    for position, value in enumerate(body[1:], start=1):
        if not MIN_BYTE <= value <= MAX_BYTE:
            raise GraphParseError(f"invalid graph6 data byte {value!r}", offset=start + position)
    actual = len(body) - 1
    if actual < expected:
        raise GraphParseError(
            f"truncated graph6 bit-vector: expected {expected} data bytes, got {actual}",
            offset=start + len(body),
        )
    if actual > expected:
        raise GraphParseError(
            f"trailing graph6 data: expected {expected} data bytes, got {actual}",
            offset=start + 1 + expected,
        )

    try:
        graph = nx.from_graph6_bytes(body)
    except nx.NetworkXError as exc:
        raise GraphParseError(f"graph6 decoding failed: {exc}", offset=start) from exc
    return Multigraph.from_networkx(graph)


def serialize_graph6(graph: Multigraph) -> str:
    """Encode a simple multigraph as graph6 (no header, no newline)."""
    if not graph.is_simple:
        raise ContractViolationError("graph6 only encodes simple graphs")
    if graph.n > MAX_ORDER:
        raise ContractViolationError(f"graph6 output is limited to {MAX_ORDER} vertices")
    encoded = nx.to_graph6_bytes(graph.to_networkx(), header=False)
    return encoded.decode("ascii").strip()
