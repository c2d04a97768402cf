import numpy as np
import pytest

from affilcomm.graph import WeightedGraph


def make_barbell() -> WeightedGraph:
    """Two triangles joined by a single bridge edge; m = 7."""
    g = WeightedGraph(6)
    for i, j in [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5), (2, 3)]:
        g.add_edge(i, j)
    return g


def make_triangle() -> WeightedGraph:
    g = WeightedGraph(3)
    for i, j in [(0, 1), (1, 2), (0, 2)]:
        g.add_edge(i, j)
    return g


def random_graph(rng: np.random.Generator, n: int, max_weight: int = 3) -> WeightedGraph:
    """Random weighted graph with at least one edge."""
    g = WeightedGraph(n)
    while g.m == 0:
        for _ in range(int(rng.integers(1, 2 * n + 1))):
            i, j = rng.integers(0, n, 2)
            if i != j:
                g.add_edge(int(i), int(j), int(rng.integers(1, max_weight + 1)))
    return g


@pytest.fixture
def barbell() -> WeightedGraph:
    return make_barbell()


@pytest.fixture
def triangle() -> WeightedGraph:
    return make_triangle()
