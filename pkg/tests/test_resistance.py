import numpy as np
import pytest

from conftest import random_connected_graph

from graphphys.errors import DisconnectedError, OutOfRangeError
from graphphys.graphs import (
    Graph,
    cycle_graph,
    laplacian_matrix,
    path_graph,
    shortest_path_distances,
)
from graphphys.resistance import (
    commute_time,
    pseudoinverse_from_resistance,
    resistance_distance,
    resistance_matrix,
)
from graphphys.spectral import laplacian_pseudoinverse

METHODS = ("pseudoinverse", "determinant", "spectral")


def test_square_cycle_values():
    c4 = cycle_graph(4)
    for method in METHODS:
        assert resistance_distance(c4, 0, 1, method) == pytest.approx(0.75, abs=1e-12)
        assert resistance_distance(c4, 0, 2, method) == pytest.approx(1.0, abs=1e-12)


def test_parallel_and_series_conductances():
    # two parallel conductances add; series resistances add
    parallel = Graph(2, [(0, 1, 3.0), (0, 1, 2.0)], simple=False)
    assert resistance_distance(parallel, 0, 1) == pytest.approx(1 / 5, abs=1e-12)
    series = Graph(3, [(0, 1, 2.0), (1, 2, 4.0)])
    assert resistance_distance(series, 0, 2) == pytest.approx(0.5 + 0.25, abs=1e-12)


def test_methods_agree_on_random_graphs(rng):
    for _ in range(30):
        n = int(rng.integers(3, 30))
        g = random_connected_graph(rng, n, extra=1.0)
        u, v = sorted(rng.choice(n, size=2, replace=False).tolist())
        values = [resistance_distance(g, u, v, m) for m in METHODS]
        assert max(values) - min(values) < 1e-9


def test_tree_resistance_equals_hop_distance(rng):
    for _ in range(15):
        n = int(rng.integers(3, 25))
        tree = random_connected_graph(rng, n, extra=0.0)
        hops = shortest_path_distances(tree)
        u, v = sorted(rng.choice(n, size=2, replace=False).tolist())
        assert resistance_distance(tree, u, v) == pytest.approx(
            float(hops.distance(u, v)), abs=1e-10
        )


def test_self_distance_is_zero():
    assert resistance_distance(cycle_graph(5), 2, 2) == 0.0


def test_cross_component_raises_but_within_component_works():
    g = Graph(6, [(0, 1), (1, 2), (3, 4), (4, 5)])
    assert resistance_distance(g, 0, 2) == pytest.approx(2.0)
    assert resistance_distance(g, 3, 5) == pytest.approx(2.0)
    with pytest.raises(DisconnectedError):
        resistance_distance(g, 0, 4)


def test_nonpositive_conductance_rejected():
    with pytest.raises(OutOfRangeError):
        resistance_distance(Graph(2, [(0, 1, -1.0)]), 0, 1)


def test_matrix_is_a_metric(rng):
    g = random_connected_graph(rng, 12, extra=0.8)
    omega = resistance_matrix(g)
    assert np.allclose(omega, omega.T, atol=1e-12)
    assert np.allclose(np.diag(omega), 0.0, atol=1e-12)
    assert np.all(omega + 1e-12 >= 0)
    for u in range(12):
        for v in range(12):
            for w in range(12):
                assert omega[u, v] <= omega[u, w] + omega[w, v] + 1e-9


def test_matrix_matches_pairwise_calls(rng):
    g = random_connected_graph(rng, 9, extra=0.7)
    omega = resistance_matrix(g)
    for u in range(9):
        for v in range(u + 1, 9):
            assert omega[u, v] == pytest.approx(
                resistance_distance(g, u, v), abs=1e-9
            )


def test_matrix_requires_connected():
    with pytest.raises(DisconnectedError):
        resistance_matrix(Graph(4, [(0, 1), (2, 3)]))


def test_pseudoinverse_round_trip(rng):
    for _ in range(10):
        g = random_connected_graph(rng, 10, extra=0.6)
        omega = resistance_matrix(g)
        recovered = pseudoinverse_from_resistance(omega)
        expect = laplacian_pseudoinverse(laplacian_matrix(g))
        assert np.allclose(recovered, expect, atol=1e-9)


def test_commute_time_path_ends():
    # random-walk round trip across a 2-edge path: 2 * m * resistance = 8
    assert commute_time(path_graph(3), 0, 2) == pytest.approx(8.0)


def test_commute_time_scales_with_total_weight(rng):
    g = random_connected_graph(rng, 8, extra=0.5)
    base = commute_time(g, 0, 7)
    doubled = Graph(8, [(e.u, e.v, 2.0 * e.weight) for e in g.edges])
    # doubling every conductance halves resistance but doubles total weight
    assert commute_time(doubled, 0, 7) == pytest.approx(base, rel=1e-9)
