"""Named graphs that realize the structures the constructions handle."""

from typing import Callable, Dict, List, Tuple

import networkx as nx

from ..errors import InputError
from ..models.graph import Multigraph


def _qt4() -> Multigraph:
    """Hubs 0 and 1 with four triangle gadgets x-y, x-z doubled and y-z single.

    Gadget i occupies x = 2 + 3i, y = x + 1, z = x + 2; y and z meet hub 0
    for the first two gadgets and hub 1 for the last two.
    """
    records: List[Tuple[int, int, int]] = []
    for i in range(4):
        x = 2 + 3 * i
        y, z = x + 1, x + 2
        hub = 0 if i < 2 else 1
        records += [(x, y, 2), (x, z, 2), (y, z, 1), (y, hub, 1), (z, hub, 1)]
    return Multigraph.from_edges(14, records)


def _five_gadget(first: int) -> List[Tuple[int, int, int]]:
    """K5 on first..first+4 with {first, first+1} and {first+2, first+3} doubled."""
    records = []
    for i in range(5):
        for j in range(i + 1, 5):
            doubled = (i, j) in ((0, 1), (2, 3))
            records.append((first + i, first + j, 2 if doubled else 1))
    return records


def _penta5() -> Multigraph:
    """Hub 0 joined to a doubled triangle {1, 2, 3} and to the degree-4 vertex of two gadgets."""
    records = [(1, 2, 2), (1, 3, 2), (2, 3, 2), (0, 1, 1), (0, 2, 1), (0, 3, 1)]
    records += _five_gadget(4) + [(0, 8, 1)]
    records += _five_gadget(9) + [(0, 13, 1)]
    return Multigraph.from_edges(14, records)


def _dtri() -> Multigraph:
    return Multigraph.from_edges(3, [(0, 1, 2), (0, 2, 2), (1, 2, 2)])


def _petersen() -> Multigraph:
    return Multigraph.from_networkx(nx.petersen_graph())


FIXTURES: Dict[str, Callable[[], Multigraph]] = {
    "petersen": _petersen,
    "qt4": _qt4,
    "penta5": _penta5,
    "dtri": _dtri,
}


def fixture(name: str) -> Multigraph:
    """Build a named fixture graph.

    Raises:
        InputError: Unknown name.
    """
    builder = FIXTURES.get(name.lower())
    if builder is None:
        raise InputError(f"unknown fixture {name!r}. Supported fixtures: {sorted(FIXTURES)}")
    return builder()


def list_fixtures() -> List[str]:
    return sorted(FIXTURES)
