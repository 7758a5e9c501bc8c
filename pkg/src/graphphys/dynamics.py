"""Dynamical processes on graphs: diffusive consensus, synchronization
diagnostics, and compartmental epidemic models.

Consensus comes in an exact continuous-time form (spectral propagator of
the Laplacian) and a discrete averaging map.  Epidemics are mean-field
node-level ODEs integrated with a fixed-step fourth-order Runge-Kutta
scheme.  Trajectories carry their time grid, state history and model
metadata, and can be exported through :mod:`graphphys.fileio`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import (
    BadInitialStateError,
    BadParameterError,
    DisconnectedError,
)
from .graphs import Graph, adjacency_matrix, laplacian_matrix
from .spectral import eig_symmetric

__all__ = [
    "Trajectory",
    "consensus_continuous",
    "consensus_discrete",
    "sync_eigenratio",
    "SyncVerdict",
    "sync_verdict",
    "sir_integrate",
    "sis_integrate",
]


@dataclass(frozen=True)
class Trajectory:
    """Time history of a process on a graph.

    ``states`` has shape ``(len(times), n)`` for scalar node states or
    ``(len(times), n, len(components))`` for compartment models;
    ``components`` names the trailing axis.
    """

    model: str
    times: np.ndarray
    states: np.ndarray
    components: tuple = ()
    params: dict = field(default_factory=dict)

    @property
    def final(self):
        return self.states[-1]

    def component(self, name):
        if name not in self.components:
            raise BadParameterError(f"no component {name!r} in {self.components}")
        return self.states[..., self.components.index(name)]


def _state_vector(g, phi0):
    phi = np.asarray(phi0, dtype=float)
    if phi.shape != (g.n,):
        raise BadParameterError(f"initial state must have shape ({g.n},)")
    return phi


def _time_grid(t_end, steps):
    if t_end <= 0 or steps < 1:
        raise BadParameterError("need t_end > 0 and at least one step")
    return np.linspace(0.0, t_end, steps + 1)


def consensus_continuous(g, phi0, t_end, steps=200):
    """Diffusive averaging ``dphi/dt = -L phi``, solved exactly by the
    spectral propagator ``phi(t) = sum_k exp(-mu_k t) U_k (U_k . phi0)``.

    The state relaxes to the mean of ``phi0`` on each connected
    component; the slowest decaying mode is the spectral gap ``mu_2``.
    """
    phi = _state_vector(g, phi0)
    times = _time_grid(t_end, steps)
    spec = eig_symmetric(laplacian_matrix(g))
    coeffs = spec.vectors.T @ phi
    decay = np.exp(-np.outer(times, spec.values))
    states = (decay * coeffs) @ spec.vectors.T
    return Trajectory(
        model="consensus",
        times=times,
        states=states,
        params={"t_end": float(t_end), "steps": int(steps)},
    )


def consensus_discrete(g, phi0, epsilon, steps):
    """Repeated local averaging ``phi <- (I - eps L) phi``.

    The map is a proper averaging (nonnegative weights, rows summing to
    one) only for ``0 < eps < 1/max_degree``; anything else raises
    :class:`BadParameterError`.  The mean of ``phi`` is conserved exactly
    at every step.
    """
    phi = _state_vector(g, phi0)
    if steps < 0:
        raise BadParameterError("step count must be nonnegative")
    lap = laplacian_matrix(g)
    max_degree = float(np.max(np.diag(lap))) if g.n else 0.0
    if not (epsilon > 0 and (max_degree == 0 or epsilon < 1.0 / max_degree)):
        raise BadParameterError(
            f"averaging weight must satisfy 0 < eps < 1/{max_degree:.6g}"
        )
    walk = np.eye(g.n) - epsilon * lap
    states = np.empty((steps + 1, g.n))
    states[0] = phi
    for t in range(steps):
        states[t + 1] = walk @ states[t]
    return Trajectory(
        model="consensus_discrete",
        times=np.arange(steps + 1, dtype=float),
        states=states,
        params={"epsilon": float(epsilon), "steps": int(steps)},
    )


def sync_eigenratio(g):
    """Laplacian eigenvalue ratio ``mu_max / mu_2``: the smaller it is,
    the wider the coupling window for identical-oscillator
    synchronization.  Equals 1 exactly for complete graphs."""
    spec = eig_symmetric(laplacian_matrix(g))
    mu2 = spec.values[-2] if g.n > 1 else 0.0
    if mu2 <= spec.tol:
        raise DisconnectedError("eigenratio needs a connected graph")
    return float(spec.values[0] / mu2)


@dataclass(frozen=True)
class SyncVerdict:
    """Outcome of the master-stability window test: the coupled modes
    ``c mu_k`` must all land inside ``(alpha1, alpha2)``."""

    stable: bool
    low_margin: float
    high_margin: float
    eigenratio: float


def sync_verdict(g, coupling, alpha_low, alpha_high):
    """Check both ends of the synchronization window: the slowest mode
    must be driven hard enough (``c mu_2 > alpha_low``) and the fastest
    not too hard (``c mu_max < alpha_high``)."""
    if coupling <= 0 or alpha_high <= alpha_low:
        raise BadParameterError("need coupling > 0 and alpha_low < alpha_high")
    spec = eig_symmetric(laplacian_matrix(g))
    mu2 = spec.values[-2] if g.n > 1 else 0.0
    if mu2 <= spec.tol:
        raise DisconnectedError("synchronization needs a connected graph")
    mu_max = spec.values[0]
    low = coupling * mu2 - alpha_low
    high = alpha_high - coupling * mu_max
    return SyncVerdict(
        stable=bool(low > 0 and high > 0),
        low_margin=float(low),
        high_margin=float(high),
        eigenratio=float(mu_max / mu2),
    )


def _rk4(deriv, y0, times):
    """Classic fixed-step fourth-order Runge-Kutta integration."""
    states = np.empty((times.size,) + y0.shape)
    states[0] = y0
    y = y0
    for i in range(times.size - 1):
        h = times[i + 1] - times[i]
        k1 = deriv(y)
        k2 = deriv(y + 0.5 * h * k1)
        k3 = deriv(y + 0.5 * h * k2)
        k4 = deriv(y + h * k3)
        y = y + h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
        states[i + 1] = y
    return states


def _epidemic_setup(g, infected, susceptible):
    x0 = np.asarray(infected, dtype=float)
    if x0.shape != (g.n,):
        raise BadInitialStateError(f"infected fractions must have shape ({g.n},)")
    if np.any(x0 < 0) or np.any(x0 > 1):
        raise BadInitialStateError("infected fractions must lie in [0, 1]")
    if susceptible is None:
        s0 = 1.0 - x0
    else:
        s0 = np.asarray(susceptible, dtype=float)
        if s0.shape != (g.n,) or np.any(s0 < 0):
            raise BadInitialStateError("susceptible fractions must be nonnegative")
        if np.any(s0 + x0 > 1.0 + 1e-12):
            raise BadInitialStateError("per-node fractions must not exceed one")
    return adjacency_matrix(g), s0, x0


def sir_integrate(
    g,
    infected,
    infection_rate,
    recovery_rate,
    t_end,
    steps=400,
    susceptible=None,
):
    """Mean-field susceptible-infected-recovered dynamics on a graph.

    Per node, with ``f_i = sum_j A_ij x_j`` the infection pressure:
    ``ds/dt = -nu s f``, ``dx/dt = nu s f - delta x``, ``dr/dt = delta x``
    (``nu`` the infection rate, ``delta`` the recovery rate).  The
    per-node total ``s + x + r`` is conserved.  Integration is fixed-step
    Runge-Kutta; states are ``(times, node, component)`` with components
    ``("s", "x", "r")``.
    """
    if infection_rate < 0 or recovery_rate < 0:
        raise BadParameterError("rates must be nonnegative")
    a, s0, x0 = _epidemic_setup(g, infected, susceptible)
    r0 = 1.0 - s0 - x0
    times = _time_grid(t_end, steps)

    def deriv(y):
        s, x = y[:, 0], y[:, 1]
        pressure = a @ x
        new_inf = infection_rate * s * pressure
        rec = recovery_rate * x
        return np.stack([-new_inf, new_inf - rec, rec], axis=1)

    states = _rk4(deriv, np.stack([s0, x0, r0], axis=1), times)
    return Trajectory(
        model="sir",
        times=times,
        states=states,
        components=("s", "x", "r"),
        params={
            "infection_rate": float(infection_rate),
            "recovery_rate": float(recovery_rate),
        },
    )


def sis_integrate(
    g,
    infected,
    infection_rate,
    recovery_rate,
    t_end,
    steps=400,
):
    """Mean-field susceptible-infected-susceptible dynamics: like
    :func:`sir_integrate` but recovered nodes return to the susceptible
    pool, so ``s + x = 1`` per node throughout.  Components are
    ``("s", "x")``."""
    if infection_rate < 0 or recovery_rate < 0:
        raise BadParameterError("rates must be nonnegative")
    a, s0, x0 = _epidemic_setup(g, infected, None)
    times = _time_grid(t_end, steps)

    def deriv(y):
        s, x = y[:, 0], y[:, 1]
        flow = infection_rate * s * (a @ x) - recovery_rate * x
        return np.stack([-flow, flow], axis=1)

    states = _rk4(deriv, np.stack([s0, x0], axis=1), times)
    return Trajectory(
        model="sis",
        times=times,
        states=states,
        components=("s", "x"),
        params={
            "infection_rate": float(infection_rate),
            "recovery_rate": float(recovery_rate),
        },
    )
