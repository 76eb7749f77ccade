"""Test fixtures and configuration."""

from pathlib import Path

import networkx as nx
import pytest

from src.generators.fixtures import fixture
from src.models.graph import BipartiteGraph, Multigraph
from src.parsers.mel import serialize_mel


def _doubled_triangle(first: int):
    return [(first, first + 1, 2), (first, first + 2, 2), (first + 1, first + 2, 2)]


@pytest.fixture
def k4() -> Multigraph:
    """Complete graph on four vertices."""
    return Multigraph.from_networkx(nx.complete_graph(4))


@pytest.fixture
def c5() -> Multigraph:
    """Five-cycle."""
    return Multigraph.from_networkx(nx.cycle_graph(5))


@pytest.fixture
def path3() -> Multigraph:
    """Path a-b-c with b = 1 in the middle."""
    return Multigraph.from_edges(3, [(0, 1), (1, 2)])


@pytest.fixture
def petersen() -> Multigraph:
    """Petersen graph."""
    return fixture("petersen")


@pytest.fixture
def qt4() -> Multigraph:
    """4-regular multigraph with two hubs and four triangle gadgets."""
    return fixture("qt4")


@pytest.fixture
def penta5() -> Multigraph:
    """5-regular multigraph with one hub, a doubled triangle and two K5 gadgets."""
    return fixture("penta5")


@pytest.fixture
def dtri() -> Multigraph:
    """Doubled triangle."""
    return fixture("dtri")


@pytest.fixture
def five_regular_triangles() -> Multigraph:
    """5-regular multigraph whose construction needs an M'-covered triangle.

    Hubs 0 and 1; doubled triangles {2,3,4}, {5,6,7}, {8,9,10}; and a K5
    gadget on 11..15 with {11,12} and {13,14} doubled. Triangle {2,3,4} and
    vertices 5, 6 meet hub 0; vertex 7, triangle {8,9,10} and 15 meet hub 1.
    """
    records = _doubled_triangle(2) + _doubled_triangle(5) + _doubled_triangle(8)
    records += [(2, 0), (3, 0), (4, 0), (5, 0), (6, 0), (7, 1), (8, 1), (9, 1), (10, 1)]
    for i in range(11, 16):
        for j in range(i + 1, 16):
            records.append((i, j, 2 if (i, j) in ((11, 12), (13, 14)) else 1))
    records.append((15, 1))
    return Multigraph.from_edges(16, records)


@pytest.fixture
def cubic_gadgets() -> Multigraph:
    """3-regular multigraph: hub 0 and three triangles x-y doubled, each z on the hub."""
    records = []
    for i in range(3):
        x = 1 + 3 * i
        y, z = x + 1, x + 2
        records += [(x, y, 2), (x, z, 1), (y, z, 1), (z, 0, 1)]
    return Multigraph.from_edges(10, records)


@pytest.fixture
def tripled_triangles() -> Multigraph:
    """Two disjoint triangles with every edge tripled (6-regular, deficiency 2)."""
    records = []
    for first in (0, 3):
        records += [(first, first + 1, 3), (first, first + 2, 3), (first + 1, first + 2, 3)]
    return Multigraph.from_edges(6, records)


@pytest.fixture
def quadrupled_triangles() -> Multigraph:
    """Two disjoint triangles with every edge quadrupled (8-regular, deficiency 2)."""
    records = []
    for first in (0, 3):
        records += [(first, first + 1, 4), (first, first + 2, 4), (first + 1, first + 2, 4)]
    return Multigraph.from_edges(6, records)


@pytest.fixture
def star_bipartite() -> BipartiteGraph:
    """A = {0}, B = {1, 2}, edges 0-1 and 0-2."""
    return BipartiteGraph.build(1, 2, [(0, 0, 1), (0, 1, 1)])


@pytest.fixture
def qt4_file(tmp_path, qt4) -> Path:
    """qt4 written as a MEL file."""
    path = tmp_path / "qt4.mel"
    path.write_text(serialize_mel(qt4))
    return path


@pytest.fixture
def temp_config_file(tmp_path) -> Path:
    """Create a temporary configuration file."""
    config_content = """
oracle:
  enumeration_edge_budget: 20
  fallback_max_n: 10
scan:
  workers: 1
  trials: 25
  seed: 7
logging:
  level: INFO
"""
    config_file = tmp_path / "regmatch.yml"
    config_file.write_text(config_content)
    return config_file
