from fractions import Fraction as F

import pytest

from instances import vertices
from traj_model import EdgeSet, WeightedEdge, build_edge_set


@pytest.fixture
def l_vertices():
    return vertices((0, (0, 0)), (4, (4, 0)), (8, (4, 4)))


@pytest.fixture
def l_trajectory(l_vertices):
    return build_edge_set(l_vertices)


@pytest.fixture
def single_edge():
    """(0,0)–(10,0) con duración 10."""
    return EdgeSet.of([WeightedEdge.between((F(0), F(0)), (F(10), F(0)), F(10))])


@pytest.fixture
def two_rows():
    """y=0 en [0,10] (w=10) e y=1 en [5,9] (w=8)."""
    return EdgeSet.of([
        WeightedEdge.between((F(0), F(0)), (F(10), F(0)), F(10)),
        WeightedEdge.between((F(5), F(1)), (F(9), F(1)), F(8)),
    ])


@pytest.fixture
def l_file(tmp_path):
    path = tmp_path / "l.csv"
    path.write_text("# trayectoria en L\nt,x,y\n0,0,0\n4,4,0\n8,4,4\n", encoding="utf-8")
    return path
