import numpy as np
import pytest

from affilcomm.errors import SelfLoopError, UnknownVertexError, ZeroWeightError
from affilcomm.graph import VertexKind, WeightedGraph

from conftest import make_barbell, make_triangle, random_graph


def test_single_edge():
    g = WeightedGraph(2)
    g.add_edge(0, 1, 1)
    assert g.m == 1
    assert g.weighted_degree(0) == 1
    assert g.weighted_degree(1) == 1


def test_multiplicity_accumulates():
    g = WeightedGraph(2)
    g.add_edge(0, 1, 1)
    g.add_edge(0, 1, 1)
    assert g.weight(0, 1) == 2
    assert g.m == 2


def test_self_loop_rejected():
    g = WeightedGraph(2)
    with pytest.raises(SelfLoopError):
        g.add_edge(0, 0, 1)


def test_unknown_vertex_rejected():
    g = WeightedGraph(2)
    with pytest.raises(UnknownVertexError):
        g.add_edge(0, 2, 1)
    with pytest.raises(UnknownVertexError):
        g.weighted_degree(5)


def test_zero_weight_rejected():
    g = WeightedGraph(2)
    with pytest.raises(ZeroWeightError):
        g.add_edge(0, 1, 0)


def test_real_weight_rejected():
    g = WeightedGraph(2)
    with pytest.raises(TypeError):
        g.add_edge(0, 1, 0.5)


def test_triangle_degrees():
    g = make_triangle()
    assert all(g.weighted_degree(i) == 2 for i in range(3))


def test_star_center_degree():
    g = WeightedGraph(5)
    for leaf in range(1, 5):
        g.add_edge(0, leaf)
    assert g.weighted_degree(0) == 4


def test_degree_counts_multiplicity():
    g = WeightedGraph(2)
    g.add_edge(0, 1, 3)
    assert g.weighted_degree(0) == 3


def test_total_edge_weight():
    assert WeightedGraph(3).total_edge_weight() == 0
    assert make_triangle().total_edge_weight() == 3
    assert make_barbell().total_edge_weight() == 7


def test_degree_sum_is_twice_m():
    rng = np.random.default_rng(1)
    for _ in range(30):
        g = random_graph(rng, int(rng.integers(2, 20)))
        assert sum(g.weighted_degree(i) for i in range(g.n)) == 2 * g.m


def test_insertion_order_invariance():
    rng = np.random.default_rng(2)
    edges = [(0, 1, 2), (1, 2, 1), (2, 3, 3), (0, 3, 1), (1, 3, 2)]
    g1 = WeightedGraph(4)
    for i, j, w in edges:
        g1.add_edge(i, j, w)
    perm = list(range(len(edges)))
    rng.shuffle(perm)
    g2 = WeightedGraph(4)
    for k in perm:
        i, j, w = edges[k]
        g2.add_edge(i, j, w)
    assert g1.m == g2.m
    assert [g1.weighted_degree(i) for i in range(4)] == [
        g2.weighted_degree(i) for i in range(4)
    ]


def test_isomorphism_preserves_degrees_and_m():
    rng = np.random.default_rng(3)
    g = random_graph(rng, 12)
    perm = rng.permutation(12)
    h = WeightedGraph(12)
    for i, j, w in g.edges():
        h.add_edge(int(perm[i]), int(perm[j]), w)
    assert h.m == g.m
    assert sorted(h.weighted_degree(i) for i in range(12)) == sorted(
        g.weighted_degree(i) for i in range(12)
    )


def test_csr_matches_adjacency():
    rng = np.random.default_rng(4)
    g = random_graph(rng, 10)
    indptr, indices, weights = g.csr()
    a = g.adjacency_matrix()
    assert (a == a.T).all()
    for i in range(g.n):
        row = {int(indices[e]): int(weights[e]) for e in range(indptr[i], indptr[i + 1])}
        for j in range(g.n):
            assert row.get(j, 0) == a[i, j]


def test_kinds_are_recorded():
    g = WeightedGraph(
        2, kinds=[VertexKind.ACTOR, VertexKind.AFFILIATION], labels=["p", "org"]
    )
    assert g.kinds[1] is VertexKind.AFFILIATION
    assert g.labels == ["p", "org"]
