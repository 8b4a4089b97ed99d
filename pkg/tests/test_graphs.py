import numpy as np
import pytest

from adehall.graphs import (
    GraphError,
    SimplyLacedGraph,
    adjacency_isomorphic,
    affine_adjacency,
    cycle_graph,
    graph_from_adjacency,
    integer_kernel_vector,
    leading_principal_minors,
    path_graph,
)


def test_graph_validation():
    with pytest.raises(GraphError):
        SimplyLacedGraph(3, ((0, 0),))
    with pytest.raises(GraphError):
        SimplyLacedGraph(3, ((0, 1), (0, 1)))
    with pytest.raises(GraphError):
        SimplyLacedGraph(2, ((1, 0),))  # edges must be sorted pairs


def test_arrows_cover_both_orientations():
    g = path_graph(3)
    assert set(g.arrows()) == {(0, 1), (1, 0), (1, 2), (2, 1)}
    assert g.neighbors(1) == (0, 2)
    assert g.adjacent(0, 1) and not g.adjacent(0, 2)


def test_affine_shapes():
    marks = {
        ("A", 3): [1, 1, 1],
        ("D", 2): [1, 1, 1, 1, 2],
        ("D", 4): [1, 1, 1, 1, 2, 2, 2],
        ("E6", 0): [1, 1, 1, 2, 2, 2, 3],
        ("E7", 0): [1, 1, 2, 2, 2, 3, 3, 4],
        ("E8", 0): [1, 2, 2, 3, 3, 4, 4, 5, 6],
    }
    for (family, n), want in marks.items():
        adj = affine_adjacency(family, n)
        cartan = 2 * np.eye(adj.shape[0], dtype=np.int64) - adj
        kernel = integer_kernel_vector(cartan)
        assert sorted(kernel.tolist()) == want
        assert leading_principal_minors(cartan)[-1] == 0


def test_double_edge_refused_as_simply_laced():
    with pytest.raises(GraphError):
        graph_from_adjacency(affine_adjacency("A", 2))


def test_isomorphism_on_cycles_and_trees():
    a = cycle_graph(4).adjacency_matrix()
    relabel = a[np.ix_([2, 0, 3, 1], [2, 0, 3, 1])]
    assert adjacency_isomorphic(a, relabel)
    assert not adjacency_isomorphic(a, path_graph(4).adjacency_matrix())
    d4 = affine_adjacency("D", 2)
    e6 = affine_adjacency("E6")
    assert not adjacency_isomorphic(d4, e6[:5, :5])


def test_cartan_matrix_round_trip():
    g = cycle_graph(3)
    cartan = g.cartan_matrix()
    assert cartan.tolist() == [[2, -1, -1], [-1, 2, -1], [-1, -1, 2]]
    assert integer_kernel_vector(cartan).tolist() == [1, 1, 1]
