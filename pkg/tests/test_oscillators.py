import math

import numpy as np
import pytest

from conftest import random_connected_graph

from graphphys.errors import KTooSmallError
from graphphys.graphs import (
    adjacency_matrix,
    complete_graph,
    cycle_graph,
    path_graph,
)
from graphphys.oscillators import (
    OscillatorParams,
    classical_green,
    classical_partition,
    classical_partition_by_modes,
    quantum_green,
    quantum_green_gap_estimate,
    quantum_partition,
)
from graphphys.resistance import resistance_matrix


def test_two_site_partition_golden():
    params = OscillatorParams(spring_k=2.0, beta=2.0 * math.pi)
    z = classical_partition(complete_graph(2), params)
    assert z == pytest.approx(1.0 / math.sqrt(3.0), rel=1e-12)


def test_partition_routes_agree(rng):
    for _ in range(10):
        n = int(rng.integers(2, 10))
        g = random_connected_graph(rng, n, extra=0.8)
        top = float(np.max(np.abs(np.linalg.eigvalsh(adjacency_matrix(g)))))
        params = OscillatorParams(spring_k=top + 1.5, beta=0.8, mass=1.3, omega=0.9)
        direct = classical_partition(g, params)
        modes = classical_partition_by_modes(g, params)
        assert direct == pytest.approx(modes, rel=1e-10)


def test_stiffness_guard():
    with pytest.raises(KTooSmallError):
        classical_partition(cycle_graph(4), OscillatorParams(spring_k=2.0))
    with pytest.raises(KTooSmallError):
        classical_green(complete_graph(3), OscillatorParams(spring_k=1.99))


def test_green_is_inverse_precision_matrix(rng):
    # correlations of the Gaussian with energy (m w^2 / 2) x^T (K I - A) x
    g = random_connected_graph(rng, 6, extra=0.8)
    params = OscillatorParams(spring_k=9.0, beta=0.7, mass=2.0, omega=1.1)
    scale = params.beta * params.mass * params.omega**2
    precision = scale * (params.spring_k * np.eye(6) - adjacency_matrix(g))
    assert np.allclose(classical_green(g, params), np.linalg.inv(precision), atol=1e-12)


def test_green_monte_carlo_cross_check():
    g = path_graph(3)
    params = OscillatorParams(spring_k=3.0, beta=1.0)
    cov = classical_green(g, params)
    rng = np.random.default_rng(7)
    samples = rng.multivariate_normal(np.zeros(3), cov, size=200_000)
    empirical = samples.T @ samples / samples.shape[0]
    assert np.allclose(empirical, cov, atol=0.01)


def test_laplacian_form_uses_pseudoinverse():
    g = cycle_graph(4)
    params = OscillatorParams(spring_k=5.0, beta=2.0)
    green = classical_green(g, params, form="laplacian")
    # differences of the pseudoinverse reproduce resistance distances
    omega = resistance_matrix(g)
    scale = params.beta * params.mass * params.omega**2
    for u in range(4):
        for v in range(4):
            diff = green[u, u] + green[v, v] - 2.0 * green[u, v]
            assert diff * scale == pytest.approx(omega[u, v], abs=1e-10)


def test_quantum_partition_two_site_golden():
    params = OscillatorParams(spring_k=4.0, beta=1.0)
    z = quantum_partition(complete_graph(2), params)
    # default level spacing Omega = 2: modes at +-1 shift symmetrically
    assert z == pytest.approx(math.exp(-2.0), rel=1e-12)


def test_quantum_partition_mode_product(rng):
    g = random_connected_graph(rng, 7, extra=0.6)
    vals = np.linalg.eigvalsh(adjacency_matrix(g))
    params = OscillatorParams(spring_k=float(vals.max()) + 2.0, beta=0.5, hbar=1.3)
    big = params.level_spacing()
    expect = 1.0
    for lam in vals:
        shift = 1.0 - params.omega**2 * lam / (2.0 * big * big)
        expect *= math.exp(-0.5 * params.beta * params.hbar * big * shift)
    assert quantum_partition(g, params) == pytest.approx(expect, rel=1e-12)


def test_quantum_green_two_site_hyperbolic():
    params = OscillatorParams(spring_k=4.0, beta=1.0)
    green = quantum_green(complete_graph(2), params)
    # exp(tau A) on a single bond splits into cosh/sinh, tau = 1/4
    damp = math.exp(-2.0)
    assert green[0, 0] == pytest.approx(damp * math.cosh(0.25), rel=1e-12)
    assert green[0, 1] == pytest.approx(damp * math.sinh(0.25), rel=1e-12)


def test_quantum_green_walk_series(rng):
    g = random_connected_graph(rng, 6, extra=0.8)
    params = OscillatorParams(spring_k=8.0, beta=0.9, hbar=1.1, big_omega=2.5)
    a = adjacency_matrix(g)
    tau = params.beta * params.hbar * params.omega**2 / (2.0 * params.big_omega)
    series = np.zeros((6, 6))
    term = np.eye(6)
    for k in range(1, 60):
        series += term
        term = term @ (tau * a) / k
    expect = math.exp(-params.beta * params.hbar * params.big_omega) * series
    assert np.allclose(quantum_green(g, params), expect, atol=1e-10)


def test_custom_level_spacing_overrides_default():
    params = OscillatorParams(spring_k=4.0, big_omega=10.0)
    assert params.level_spacing() == 10.0
    assert OscillatorParams(spring_k=9.0).level_spacing() == pytest.approx(3.0)


def test_gap_estimate_is_a_scalar_diagnostic():
    params = OscillatorParams(spring_k=4.0, beta=0.2)
    # path ends sit on opposite signs of the (simple) slow mode
    value = quantum_green_gap_estimate(path_graph(4), params, 0, 3)
    assert isinstance(value, float)
    assert value < 1.0
    same_side = quantum_green_gap_estimate(path_graph(4), params, 0, 1)
    assert same_side > value
