"""Networks of harmonic oscillators coupled along graph edges.

Each node carries a particle of mass ``m`` in a local well of stiffness
``K * m * omega**2``; adjacent particles interact with strength
``m * omega**2 / 2`` per edge, so the quadratic form of the potential is
``(m omega^2 / 2) x^T (K I - A) x``.  Positive-definiteness requires the
on-site constant ``K`` to exceed the largest adjacency eigenvalue.

Classical results are exact Gaussian integrals; quantum results are the
leading behaviour for a well-separated ladder of local levels, controlled
by a level-spacing frequency ``big_omega`` (default ``sqrt(K) * omega``).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import KTooSmallError
from .graphs import Graph, adjacency_matrix, laplacian_matrix
from .spectral import adjacency_spectrum, eig_symmetric, laplacian_pseudoinverse

__all__ = [
    "OscillatorParams",
    "classical_partition",
    "classical_partition_by_modes",
    "classical_green",
    "quantum_partition",
    "quantum_green",
    "quantum_green_gap_estimate",
]


@dataclass(frozen=True)
class OscillatorParams:
    """Physical constants of the oscillator network.

    ``spring_k`` is the dimensionless on-site stiffness K; ``big_omega``
    is the quantum level-spacing frequency and defaults to
    ``sqrt(spring_k) * omega`` when left as None.
    """

    spring_k: float
    mass: float = 1.0
    omega: float = 1.0
    beta: float = 1.0
    hbar: float = 1.0
    big_omega: float | None = None

    def level_spacing(self):
        if self.big_omega is not None:
            return self.big_omega
        return math.sqrt(self.spring_k) * self.omega


def _stiffness_spectrum(g, params):
    """Eigen-decomposition of A with the K > lambda_1 guard."""
    spec = adjacency_spectrum(g)
    top = spec.values[0]
    if params.spring_k <= top + spec.tol:
        raise KTooSmallError(
            f"on-site stiffness K={params.spring_k} must exceed the top "
            f"adjacency eigenvalue {top:.6g}"
        )
    return spec


def classical_partition(g, params):
    """Exact classical partition function: a Gaussian integral giving
    ``(2 pi / (beta m omega^2))^{n/2} / sqrt(det(K I - A))``."""
    spec = _stiffness_spectrum(g, params)
    pref = 2.0 * math.pi / (params.beta * params.mass * params.omega**2)
    log_z = 0.5 * g.n * math.log(pref)
    for lam in spec.values:
        log_z -= 0.5 * math.log(params.spring_k - lam)
    return math.exp(log_z)


def classical_partition_by_modes(g, params):
    """Same quantity as :func:`classical_partition`, assembled as a product
    of independent normal-mode integrals (cross-check route)."""
    spec = _stiffness_spectrum(g, params)
    z = 1.0
    for lam in spec.values:
        stiff = params.beta * params.mass * params.omega**2 * (params.spring_k - lam)
        z *= math.sqrt(2.0 * math.pi / stiff)
    return z


def classical_green(g, params, form="adjacency"):
    """Thermal position correlations ``<x_p x_q>`` as an n-by-n matrix.

    ``form="adjacency"`` (the on-site-well model above) gives
    ``(beta m K omega^2)^{-1} (I - A/K)^{-1}``.  ``form="laplacian"`` is
    the translation-invariant spring network whose correlations are set by
    the Laplacian pseudoinverse; the two models differ away from the
    large-K limit.
    """
    scale = params.beta * params.mass * params.omega**2
    if form == "adjacency":
        _stiffness_spectrum(g, params)
        a = adjacency_matrix(g)
        mat = np.linalg.inv(np.eye(g.n) - a / params.spring_k)
        return mat / (scale * params.spring_k)
    if form == "laplacian":
        return laplacian_pseudoinverse(laplacian_matrix(g)) / scale
    raise ValueError(f"unknown form {form!r}")


def quantum_partition(g, params):
    """Partition function of the quantized network in the weak-coupling
    band picture: each adjacency mode j contributes its zero-point factor
    ``exp(-(beta hbar Omega / 2) (1 - omega^2 lambda_j / (2 Omega^2)))``."""
    spec = _stiffness_spectrum(g, params)
    big = params.level_spacing()
    z = 1.0
    for lam in spec.values:
        shift = 1.0 - params.omega**2 * lam / (2.0 * big * big)
        z *= math.exp(-0.5 * params.beta * params.hbar * big * shift)
    return z


def quantum_green(g, params):
    """Low-temperature propagator matrix
    ``exp(-beta hbar Omega) * exp((beta hbar omega^2 / (2 Omega)) A)``:
    entry (p, q) sums walks from p to q weighted by inverse factorial
    length, i.e. hopping amplitudes in the single-excitation band."""
    spec = adjacency_spectrum(g)
    big = params.level_spacing()
    tau = params.beta * params.hbar * params.omega**2 / (2.0 * big)
    walk = spec.apply(lambda lam: math.exp(tau * lam))
    return math.exp(-params.beta * params.hbar * big) * walk


def quantum_green_gap_estimate(g, params, p, q):
    """Diagnostic two-mode estimate of the normalized propagator
    ``G_pq / G_uniform`` using only the spectral gap of the Laplacian:
    ``1 + n U_2(p) U_2(q) exp(-beta hbar omega^2 mu_2 / (2 Omega))``.

    Useful for judging when the slowest relaxation mode dominates; not a
    substitute for :func:`quantum_green`.
    """
    spec = eig_symmetric(laplacian_matrix(g))
    big = params.level_spacing()
    # Laplacian modes ascend from the tail of the descending order.
    mu2 = spec.values[-2]
    vec = spec.vectors[:, -2]
    decay = math.exp(-params.beta * params.hbar * params.omega**2 * mu2 / (2.0 * big))
    return 1.0 + g.n * vec[p] * vec[q] * decay
