"""A graph as a thermodynamic system: Boltzmann weights on the adjacency
spectrum.

The eigenvalues of A play the role of (negative) energy levels:
``Z(beta) = sum_j exp(beta lambda_j)``.  From Z follow occupation
probabilities, Shannon entropy, internal energy and free energy (with
``k_B = 1``), and the matrix form ``exp(beta A)`` whose entries measure
weighted-walk communicability between nodes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import OutOfRangeError
from .graphs import Graph
from .spectral import adjacency_spectrum

__all__ = [
    "spectral_partition",
    "ThermodynamicReport",
    "thermodynamics",
    "communicability",
]


def spectral_partition(g, beta):
    """Partition function ``sum_j exp(beta lambda_j)`` over adjacency
    eigenvalues.  Equals the trace of ``exp(beta A)``."""
    if beta < 0:
        raise OutOfRangeError("inverse temperature must be nonnegative")
    spec = adjacency_spectrum(g)
    return float(np.sum(np.exp(beta * spec.values)))


@dataclass(frozen=True)
class ThermodynamicReport:
    """Thermodynamic summary at a fixed inverse temperature.

    ``probabilities`` are Boltzmann occupations of the eigen-levels in
    descending eigenvalue order.  Energies use the convention that level j
    contributes ``-lambda_j``, so the ground state is the top eigenvalue;
    ``internal_energy`` is therefore ``-sum_j p_j lambda_j`` and at large
    beta approaches ``-lambda_1``.  At ``beta = 0`` the free energy is
    ``-inf`` (infinite temperature) while entropy peaks at ``ln n``.
    """

    beta: float
    partition: float
    probabilities: np.ndarray
    entropy: float
    internal_energy: float
    free_energy: float


def thermodynamics(g, beta):
    """Evaluate Z, level occupations, entropy S, internal energy H and free
    energy F at inverse temperature beta (``k_B = 1``).

    The identity ``F = H - S / beta`` holds for ``beta > 0``; the bounds
    ``0 <= S <= ln n`` and ``-(n - 1) <= H <= 0`` hold for every graph
    (H = 0 only when there are no edges).
    """
    if beta < 0:
        raise OutOfRangeError("inverse temperature must be nonnegative")
    spec = adjacency_spectrum(g)
    # Work with shifted weights for overflow safety at large beta.
    shift = beta * spec.values[0]
    weights = np.exp(beta * spec.values - shift)
    total = float(np.sum(weights))
    log_z = shift + math.log(total)
    probs = weights / total
    internal = -float(np.dot(probs, spec.values))
    with np.errstate(divide="ignore"):
        entropy = -float(np.dot(probs, np.where(probs > 0, np.log(probs), 0.0)))
    free = -math.inf if beta == 0 else -log_z / beta
    # Z itself may exceed the float range even though log Z is fine.
    partition = math.exp(log_z) if log_z < math.log(np.finfo(float).max) else math.inf
    return ThermodynamicReport(
        beta=beta,
        partition=partition,
        probabilities=probs,
        entropy=entropy,
        internal_energy=internal,
        free_energy=free,
    )


def communicability(g, beta=1.0):
    """The matrix ``exp(beta A)``.  Entry (p, q) sums all walks from p to q
    weighted by ``beta^len / len!``; the diagonal holds each node's
    self-communicability and the trace equals
    :func:`spectral_partition`."""
    if beta < 0:
        raise OutOfRangeError("inverse temperature must be nonnegative")
    return adjacency_spectrum(g).apply(lambda x: np.exp(beta * x))
