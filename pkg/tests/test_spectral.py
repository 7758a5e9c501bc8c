import numpy as np
import pytest

from conftest import random_connected_graph, random_graph

from graphphys.errors import (
    DisconnectedError,
    NotSymmetricError,
    SingularResolventError,
)
from graphphys.graphs import (
    Graph,
    adjacency_matrix,
    complete_graph,
    cycle_graph,
    laplacian_matrix,
    path_graph,
)
from graphphys.spectral import (
    adjacency_spectrum,
    eig_symmetric,
    laplacian_pseudoinverse,
    laplacian_spectrum,
    matrix_exponential,
    resolvent,
)


def test_values_descend_and_vectors_are_orthonormal(rng):
    g = random_graph(rng, 9, 0.5)
    spec = adjacency_spectrum(g)
    assert np.all(np.diff(spec.values) <= 1e-12)
    assert np.allclose(spec.vectors.T @ spec.vectors, np.eye(9), atol=1e-12)


def test_reconstruction_recovers_the_matrix(rng):
    g = random_graph(rng, 8, 0.4)
    a = adjacency_matrix(g)
    assert np.allclose(adjacency_spectrum(g).reconstruct(), a, atol=1e-10)


def test_degeneracy_grouping_on_square_cycle():
    spec = adjacency_spectrum(cycle_graph(4))
    groups = [(round(val, 9), mult) for val, mult in spec.distinct]
    assert groups == [(2.0, 1), (0.0, 2), (-2.0, 1)]


def test_degeneracy_grouping_complete_graph():
    spec = adjacency_spectrum(complete_graph(7))
    assert [mult for _, mult in spec.distinct] == [1, 6]


def test_asymmetric_matrix_rejected():
    with pytest.raises(NotSymmetricError):
        eig_symmetric(np.array([[0.0, 1.0], [0.0, 0.0]]))


def test_laplacian_spectrum_nonnegative_with_zero_mode(rng):
    g = random_connected_graph(rng, 12)
    spec = laplacian_spectrum(g)
    assert spec.values[-1] == pytest.approx(0.0, abs=1e-10)
    assert np.all(spec.values >= -1e-10)


def test_resolvent_matches_walk_series(rng):
    g = random_graph(rng, 6, 0.5)
    a = adjacency_matrix(g)
    eta = 2.0 * max(1.0, np.max(np.abs(np.linalg.eigvalsh(a))))
    series = np.eye(6)
    power = np.eye(6)
    for _ in range(300):
        power = power @ (a / eta)
        series += power
    assert np.allclose(resolvent(a, eta), series, atol=1e-12)


def test_resolvent_rejects_eigenvalue_pole():
    a = adjacency_matrix(cycle_graph(4))
    with pytest.raises(SingularResolventError):
        resolvent(a, 2.0)
    with pytest.raises(SingularResolventError):
        resolvent(a, 0.0)


def test_matrix_exponential_agrees_with_series(rng):
    g = random_graph(rng, 6, 0.5)
    a = adjacency_matrix(g)
    series = np.zeros_like(a)
    term = np.eye(6)
    for k in range(1, 60):
        series += term
        term = term @ a / k
    assert np.allclose(matrix_exponential(a), series, atol=1e-12)


def test_pseudoinverse_moore_penrose_identities(rng):
    for _ in range(5):
        g = random_connected_graph(rng, 10)
        lap = laplacian_matrix(g)
        plus = laplacian_pseudoinverse(lap)
        assert np.allclose(lap @ plus @ lap, lap, atol=1e-9)
        assert np.allclose(plus @ lap @ plus, plus, atol=1e-9)
        assert np.allclose(plus, plus.T, atol=1e-12)
        assert np.allclose(plus.sum(axis=1), 0.0, atol=1e-9)


def test_pseudoinverse_dual_route(rng):
    # the regularized inverse (L + J/n)^{-1} - J/n must equal the
    # spectral pseudoinverse; keeping both routes guards each against the other
    g = random_connected_graph(rng, 9)
    lap = laplacian_matrix(g)
    n = g.n
    j = np.ones((n, n)) / n
    direct = np.linalg.inv(lap + j) - j
    assert np.allclose(laplacian_pseudoinverse(lap), direct, atol=1e-9)


def test_pseudoinverse_needs_connected_graph():
    with pytest.raises(DisconnectedError):
        laplacian_pseudoinverse(laplacian_matrix(Graph(4, [(0, 1), (2, 3)])))


def test_apply_computes_functions_through_eigenvalues():
    g = path_graph(3)
    spec = adjacency_spectrum(g)
    squared = spec.apply(lambda x: x * x)
    a = adjacency_matrix(g)
    assert np.allclose(squared, a @ a, atol=1e-12)
