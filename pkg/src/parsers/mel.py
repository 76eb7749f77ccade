"""MEL (multigraph edge list) and matching text codecs."""

from typing import Dict, List, Tuple

from ..errors import ContractViolationError, GraphParseError
from ..models.graph import Matching, Multigraph


def _content_lines(text: str) -> List[Tuple[int, List[str]]]:
    """Yield (line number, tokens) for lines that carry data."""
    lines = []
    for number, raw in enumerate(text.splitlines(), start=1):
        content = raw.split("#", 1)[0].strip()
        if content:
            lines.append((number, content.split()))
    return lines


def _parse_int(token: str, line: int, what: str) -> int:
    try:
        return int(token)
    except ValueError as exc:
        raise GraphParseError(f"{what} {token!r} is not an integer", line=line) from exc


def parse_mel(text: str) -> Multigraph:
    """Parse MEL text: a header ``n <count>`` then one ``u v m`` record per line.

    Records naming the same pair are merged by summing multiplicities.

    Raises:
        GraphParseError: Missing header, malformed record, loop, non-positive
            multiplicity or vertex out of range.
    """
    lines = _content_lines(text)
    if not lines:
        raise GraphParseError("missing 'n <count>' header", line=1)

    number, tokens = lines[0]
    if len(tokens) != 2 or tokens[0] != "n":
        raise GraphParseError("expected header 'n <count>'", line=number)
    n = _parse_int(tokens[1], number, "vertex count")
    if n < 0:
        raise GraphParseError(f"vertex count {n} is negative", line=number)

    merged: Dict[Tuple[int, int], int] = {}
    for number, tokens in lines[1:]:
        if len(tokens) not in (2, 3):
            raise GraphParseError("expected 'u v m'", line=number)
        u = _parse_int(tokens[0], number, "vertex")
        v = _parse_int(tokens[1], number, "vertex")
        m = _parse_int(tokens[2], number, "multiplicity") if len(tokens) == 3 else 1
        if u == v:
            raise GraphParseError(
                f"loop at vertex {u}: multigraphs here are loopless",
                line=number,
            )
        if m <= 0:
            raise GraphParseError(f"multiplicity {m} must be positive", line=number)
        for vertex in (u, v):
            if not 0 <= vertex < n:
                raise GraphParseError(f"vertex {vertex} outside [0, {n})", line=number)
        pair = (min(u, v), max(u, v))
        merged[pair] = merged.get(pair, 0) + m

    return Multigraph(n=n, edges=tuple((u, v, m) for (u, v), m in sorted(merged.items())))


def serialize_mel(graph: Multigraph) -> str:
    """Serialize to MEL with sorted edge records and a trailing newline."""
    lines = [f"n {graph.n}"]
    lines.extend(f"{u} {v} {m}" for u, v, m in graph.edges)
    return "\n".join(lines) + "\n"


def parse_matching(text: str, graph: Multigraph) -> Matching:
    """Parse ``u v`` lines into a matching of ``graph``.

    Raises:
        GraphParseError: Malformed line.
        ContractViolationError: The pairs do not form a matching of the graph.
    """
    pairs = []
    for number, tokens in _content_lines(text):
        if len(tokens) != 2:
            raise GraphParseError("expected 'u v'", line=number)
        u = _parse_int(tokens[0], number, "vertex")
        v = _parse_int(tokens[1], number, "vertex")
        if u == v:
            raise GraphParseError(f"pair ({u}, {v}) is a loop", line=number)
        for vertex in (u, v):
            if not 0 <= vertex < graph.n:
                raise ContractViolationError(f"vertex {vertex} is not in the graph")
        pairs.append((u, v))
    return Matching.of(graph, pairs)


def serialize_matching(matching: Matching) -> str:
    """One sorted ``u v`` pair per line; the empty matching is the empty string."""
    return "".join(f"{u} {v}\n" for u, v in matching.sorted_pairs())
