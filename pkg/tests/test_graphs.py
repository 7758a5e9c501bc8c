import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

import oracles
from conftest import random_connected_graph, random_graph

from graphphys.errors import (
    DisconnectedError,
    DuplicateEdgeError,
    OutOfRangeError,
    SelfLoopError,
)
from graphphys.graphs import (
    ACYCLIC,
    Graph,
    adjacency_matrix,
    average_path_length,
    bipartition,
    clustering,
    complete_bipartite_graph,
    complete_graph,
    connected_components,
    cycle_graph,
    degree_matrix,
    diameter,
    eccentricities,
    girth,
    incidence_matrix,
    is_connected,
    laplacian_matrix,
    maximum_bipartite_matching,
    path_graph,
    shortest_path_distances,
    star_graph,
    strongly_connected_components,
)


# --- construction and validation ------------------------------------------


def test_edge_validation():
    with pytest.raises(SelfLoopError):
        Graph(3, [(1, 1)])
    with pytest.raises(DuplicateEdgeError):
        Graph(3, [(0, 1), (1, 0)])
    with pytest.raises(OutOfRangeError):
        Graph(3, [(0, 3)])
    with pytest.raises(OutOfRangeError):
        Graph(-1, [])


def test_undirected_edges_are_canonical():
    g = Graph(4, [(3, 1), (2, 0)])
    assert [(e.u, e.v) for e in g.edges] == [(1, 3), (0, 2)]


def test_parallel_edges_need_multigraph_mode():
    g = Graph(2, [(0, 1), (1, 0)], simple=False)
    assert g.m == 2
    assert g.degree_sequence().tolist() == [2, 2]


def test_directed_keeps_orientation():
    g = Graph(3, [(2, 0)], directed=True)
    assert (g.edges[0].u, g.edges[0].v) == (2, 0)
    assert g.neighbors(2) == [0]
    assert g.neighbors(0) == []


# --- matrices -------------------------------------------------------------


def test_matrix_shapes_and_symmetry(rng):
    g = random_graph(rng, 8, 0.4)
    a = adjacency_matrix(g)
    assert a.shape == (8, 8)
    assert np.array_equal(a, a.T)
    assert np.all(np.diag(a) == 0)


def test_laplacian_is_degree_minus_adjacency(rng):
    g = random_graph(rng, 10, 0.3)
    lap = laplacian_matrix(g)
    assert np.array_equal(lap, degree_matrix(g) - adjacency_matrix(g))
    assert np.allclose(lap.sum(axis=1), 0.0)


def test_laplacian_equals_incidence_gram(rng):
    for _ in range(10):
        n = int(rng.integers(3, 9))
        g = random_graph(rng, n, 0.5)
        grad = incidence_matrix(g)
        assert np.array_equal(grad @ grad.T, laplacian_matrix(g))


def test_weighted_adjacency():
    g = Graph(3, [(0, 1, 2.5), (1, 2, 0.5)])
    a = adjacency_matrix(g)
    assert a[0, 1] == 2.5 and a[1, 2] == 0.5
    plain = adjacency_matrix(g, weighted=False)
    assert plain[0, 1] == 1


# --- distances ------------------------------------------------------------


def test_distances_match_relaxation_oracle(rng):
    for _ in range(15):
        n = int(rng.integers(3, 10))
        g = random_graph(rng, n, 0.35)
        dm = shortest_path_distances(g)
        ref = oracles.floyd_warshall_hops(n, [(e.u, e.v) for e in g.edges])
        for i in range(n):
            for j in range(n):
                expect = ref[i][j]
                got = dm.distance(i, j)
                assert got == expect or (math.isinf(expect) and math.isinf(got))


def test_path_length_small_cases():
    assert average_path_length(path_graph(4)) == pytest.approx(5 / 3)
    assert average_path_length(cycle_graph(5)) == pytest.approx(1.5)
    assert average_path_length(complete_graph(7)) == 1.0


def test_path_length_disconnected_raises():
    with pytest.raises(DisconnectedError):
        average_path_length(Graph(4, [(0, 1), (2, 3)]))


def test_eccentricity_and_diameter():
    g = path_graph(5)
    assert eccentricities(g).tolist() == [4, 3, 2, 3, 4]
    assert diameter(g) == 4
    assert diameter(cycle_graph(8)) == 4


# --- clustering -----------------------------------------------------------


def test_clustering_triangle_with_pendant():
    g = Graph(4, [(0, 1), (0, 2), (1, 2), (2, 3)])
    rep = clustering(g)
    assert rep.per_node[0] == 1.0
    assert rep.per_node[2] == pytest.approx(1 / 3)
    assert rep.per_node[3] == 0.0
    assert rep.triangles == 1
    assert rep.wedges == 5
    assert rep.transitivity == pytest.approx(3 / 5)


def test_clustering_complete_graph():
    rep = clustering(complete_graph(6))
    assert rep.average == 1.0
    assert rep.transitivity == 1.0
    assert rep.triangles == 20


@given(st.integers(4, 9), st.integers(0, 10_000))
@settings(max_examples=40, deadline=None)
def test_triangle_count_matches_trace_identity(n, seed):
    g = random_graph(np.random.default_rng(seed), n, 0.5)
    a = adjacency_matrix(g)
    assert clustering(g).triangles == round(np.trace(a @ a @ a) / 6)


# --- girth ----------------------------------------------------------------


def test_girth_known_graphs():
    assert girth(complete_graph(4)) == 3
    assert girth(cycle_graph(7)) == 7
    assert girth(complete_bipartite_graph(2, 3)) == 4
    petersen = Graph(
        10,
        [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
         (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
         (5, 7), (7, 9), (9, 6), (6, 8), (8, 5)],
    )
    assert girth(petersen) == 5


def test_girth_of_forest_is_the_acyclic_sentinel():
    assert girth(path_graph(5)) is ACYCLIC
    assert girth(Graph(3, [])) is ACYCLIC


def test_girth_parallel_edge_is_two():
    assert girth(Graph(2, [(0, 1), (0, 1)], simple=False)) == 2


def test_girth_matches_enumeration_oracle(rng):
    for _ in range(20):
        n = int(rng.integers(4, 8))
        g = random_graph(rng, n, 0.45)
        expect = oracles.girth_by_cycle_enumeration(n, [(e.u, e.v) for e in g.edges])
        if expect is None:
            assert girth(g) is ACYCLIC
        else:
            assert girth(g) == expect


# --- connectivity ---------------------------------------------------------


def test_components_sorted_by_smallest_member():
    g = Graph(6, [(4, 5), (0, 2), (1, 3)])
    assert connected_components(g) == [[0, 2], [1, 3], [4, 5]]
    assert not is_connected(g)
    assert is_connected(cycle_graph(3))


def test_strong_components_match_reachability_oracle(rng):
    for _ in range(15):
        n = int(rng.integers(3, 9))
        g = random_graph(rng, n, 0.3, directed=True)
        edges = [(e.u, e.v) for e in g.edges]
        got = sorted(sorted(c) for c in strongly_connected_components(g))
        assert got == oracles.mutual_reachability_classes(n, edges)


def test_strong_connectivity_flag():
    ring = Graph(3, [(0, 1), (1, 2), (2, 0)], directed=True)
    chain = Graph(3, [(0, 1), (1, 2)], directed=True)
    assert is_connected(ring, strong=True)
    assert not is_connected(chain, strong=True)


# --- bipartite structure --------------------------------------------------


def test_bipartition_even_cycle_and_odd_cycle():
    parts = bipartition(cycle_graph(6))
    assert parts is not None
    small, large = parts
    assert len(small) == len(large) == 3
    assert bipartition(cycle_graph(5)) is None


def test_bipartition_orders_smaller_side_first():
    small, large = bipartition(star_graph(4))
    assert list(small) == [0]
    assert len(large) == 4


def test_maximum_matching_known_sizes():
    assert maximum_bipartite_matching(path_graph(4))[0] == 2
    assert maximum_bipartite_matching(star_graph(5))[0] == 1
    assert maximum_bipartite_matching(cycle_graph(6))[0] == 3
    size, pairs = maximum_bipartite_matching(complete_bipartite_graph(3, 4))
    assert size == 3
    used = [v for pair in pairs for v in pair]
    assert len(set(used)) == len(used)


def test_matching_is_valid_on_random_trees(rng):
    for _ in range(10):
        n = int(rng.integers(4, 20))
        g = random_connected_graph(rng, n, extra=0.0)
        size, pairs = maximum_bipartite_matching(g)
        assert len(pairs) == size
        edge_set = {(e.u, e.v) for e in g.edges}
        for u, v in pairs:
            assert (min(u, v), max(u, v)) in edge_set
