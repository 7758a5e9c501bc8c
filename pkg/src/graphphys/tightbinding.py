"""One-electron tight-binding (Hueckel) theory on graphs.

Orbital energies are an affine map of adjacency eigenvalues,
``E_j = alpha + beta * lambda_j`` with beta < 0 by convention, so adjacency
spectra translate directly into total pi-electron energies, zero-mode
(radical) counts, and ground-state spins of alternant hydrocarbons.  The
module also provides closed-form spectra for paths, cycles and linear
polyacenes, and honeycomb-patch builders for the worked molecules.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import (
    AcyclicError,
    DisconnectedError,
    NotBipartiteError,
    OddNodeCountError,
    OutOfRangeError,
    TooLargeError,
)
from .graphs import (
    ACYCLIC,
    Graph,
    bipartition,
    diameter,
    girth,
    is_connected,
    maximum_bipartite_matching,
)
from .spectral import adjacency_spectrum

__all__ = [
    "HuckelResult",
    "huckel_spectrum",
    "total_pi_energy",
    "energy_bounds",
    "closed_form_spectrum",
    "nullity",
    "nullity_via_matching",
    "NullityBounds",
    "nullity_bounds",
    "girth_nullity_bound",
    "lieb_total_spin",
    "benzenoid_graph",
    "polyacene_graph",
    "pyrene_graph",
    "triangulene_graph",
]

#: refuse cycle enumeration beyond this many elementary cycles
MAX_CYCLES = 100_000


@dataclass(frozen=True)
class HuckelResult:
    """Orbital energies (ascending), their ground-state occupations, and
    the resulting total energy.  Occupations are 0, 1 or 2 and sum to the
    electron count."""

    alpha: float
    beta: float
    energies: np.ndarray
    occupations: np.ndarray
    n_electrons: int
    total_energy: float


def huckel_spectrum(g, alpha=0.0, beta=-1.0, n_electrons=None):
    """Orbital energies and ground-state filling of the one-electron model.

    Parameters
    ----------
    g : Graph
        Molecular graph (sites = atoms contributing one orbital each).
    alpha, beta : float
        On-site energy and (negative) hopping energy.
    n_electrons : int, optional
        Defaults to one electron per site (the half-filled pi system).

    Filling is strictly by energy, two electrons per orbital, lowest first;
    an odd electron count leaves one singly-occupied orbital.
    """
    if beta >= 0:
        raise OutOfRangeError("the hopping energy beta must be negative")
    spec = adjacency_spectrum(g)
    energies = alpha + beta * spec.values      # beta < 0: ascending energies
    n = g.n
    if n_electrons is None:
        n_electrons = n
    if not 0 <= n_electrons <= 2 * n:
        raise OutOfRangeError(f"cannot place {n_electrons} electrons in {n} orbitals")
    occ = np.zeros(n, dtype=np.int64)
    remaining = n_electrons
    for j in range(n):
        take = min(2, remaining)
        occ[j] = take
        remaining -= take
    total = float(np.dot(occ, energies))
    return HuckelResult(
        alpha=float(alpha),
        beta=float(beta),
        energies=energies,
        occupations=occ,
        n_electrons=int(n_electrons),
        total_energy=total,
    )


def total_pi_energy(eigenvalues):
    """Total pi energy in units of |beta| from adjacency eigenvalues.

    Using the half-filled ground state: with eigenvalues sorted descending,
    twice the sum of the top half for even n; for odd n the middle
    eigenvalue enters once.
    """
    lam = np.sort(np.asarray(eigenvalues, dtype=float))[::-1]
    n = len(lam)
    if n % 2 == 0:
        return float(2.0 * lam[: n // 2].sum())
    half = (n - 1) // 2
    return float(2.0 * lam[:half].sum() + lam[half])


def energy_bounds(g):
    """Bounds on the graph energy sum(|lambda_j|).

    Returns ``(lower, upper, bipartite_upper)`` with
    ``lower = sqrt(2m + n(n-1) |det A|^(2/n))``, ``upper = sqrt(2mn)``, and
    for bipartite graphs on n > 2 nodes additionally
    ``4m/n + sqrt((n-2)(2m - 8m^2/n^2))`` (None otherwise).
    """
    from .graphs import adjacency_matrix

    a = adjacency_matrix(g, weighted=False)
    n, m = g.n, g.m
    if n == 0:
        return 0.0, 0.0, None
    det = abs(float(np.linalg.det(a)))
    lower = math.sqrt(2 * m + n * (n - 1) * det ** (2.0 / n))
    upper = math.sqrt(2.0 * m * n)
    bip_upper = None
    if n > 2 and bipartition(g) is not None:
        inner = (n - 2) * (2 * m - 8.0 * m * m / (n * n))
        if inner >= 0:
            bip_upper = 4.0 * m / n + math.sqrt(inner)
    return lower, upper, bip_upper


def closed_form_spectrum(family, n):
    """Exact adjacency eigenvalues of simple families, sorted descending.

    ``path``
        ``2 cos(pi j / (n+1))`` for j = 1..n.
    ``cycle``
        ``2 cos(2 pi j / n)`` for j = 1..n.
    ``polyacene``
        For N linearly fused hexagons (n = N): one pair at +-1 plus the
        four branches ``+-(1 +- sqrt(9 + 8 cos(k pi / (N+1)))) / 2`` for
        k = 1..N, giving 4N + 2 values.
    """
    if n < 1:
        raise OutOfRangeError("need n >= 1")
    if family == "path":
        j = np.arange(1, n + 1)
        vals = 2.0 * np.cos(np.pi * j / (n + 1))
    elif family == "cycle":
        if n < 3:
            raise OutOfRangeError("a cycle needs n >= 3")
        j = np.arange(1, n + 1)
        vals = 2.0 * np.cos(2.0 * np.pi * j / n)
    elif family == "polyacene":
        k = np.arange(1, n + 1)
        root = np.sqrt(9.0 + 8.0 * np.cos(np.pi * k / (n + 1)))
        vals = np.concatenate(
            [(1 + root) / 2, (1 - root) / 2, -(1 + root) / 2, -(1 - root) / 2, [1.0, -1.0]]
        )
    else:
        raise OutOfRangeError(f"unknown family {family!r}")
    return np.sort(vals)[::-1]


# ---------------------------------------------------------------------------
# zero modes
# ---------------------------------------------------------------------------

def nullity(g):
    """Number of adjacency eigenvalues equal to zero (within the spectral
    degeneracy tolerance)."""
    spec = adjacency_spectrum(g)
    return int(np.sum(np.abs(spec.values) <= spec.tol))


def _elementary_cycle_lengths(g):
    """Lengths of all elementary cycles (each counted once)."""
    adj = [sorted(set(nbrs)) for nbrs in (g._adjacency_lists())]
    lengths = []
    for root in range(g.n):
        stack = [(root, (root,), frozenset((root,)))]
        while stack:
            u, path, used = stack.pop()
            for v in adj[u]:
                if v == root and len(path) >= 3 and path[1] < path[-1]:
                    lengths.append(len(path))
                    if len(lengths) > MAX_CYCLES:
                        raise TooLargeError("too many cycles to enumerate")
                elif v > root and v not in used:
                    stack.append((v, path + (v,), used | {v}))
    return lengths


def nullity_via_matching(g, benzenoid=False):
    """Zero-mode count as n - 2M, M the maximum matching size.

    Valid for trees and, more generally, bipartite graphs without cycles of
    length divisible by four; honeycomb (benzenoid) graphs are exempt from
    that restriction, which the ``benzenoid`` flag asserts.  Non-forest,
    non-benzenoid inputs get their cycles enumerated to verify the
    precondition.

    Raises
    ------
    NotBipartiteError
        If the graph has an odd cycle.
    OutOfRangeError
        If a cycle of length 4s is present and ``benzenoid`` is not set.
    """
    if bipartition(g) is None:
        raise NotBipartiteError("the matching rule applies to bipartite graphs")
    if not benzenoid and girth(g) is not ACYCLIC:
        bad = [ln for ln in _elementary_cycle_lengths(g) if ln % 4 == 0]
        if bad:
            raise OutOfRangeError(
                f"cycle of length {bad[0]} breaks the matching rule "
                "(set benzenoid=True only for honeycomb patches)"
            )
    size, _ = maximum_bipartite_matching(g)
    return g.n - 2 * size


@dataclass(frozen=True)
class NullityBounds:
    """Upper bounds on the zero-mode count.

    ``girth_bound`` is ``n - g + 2`` when the girth g is divisible by 4 and
    ``n - g`` otherwise; ``girth_bound_naive`` doubles the girth term
    (``n - 2g + 2`` / ``n - 2g``), which is reported for comparison but can
    go below the true nullity already on a 4-cycle.  ``diameter_bound`` is
    ``n - D`` for even diameter D, else ``n - D - 1``.  Girth fields are
    None for forests.
    """

    nullity: int
    girth: int | None
    girth_bound: int | None
    girth_bound_naive: int | None
    diameter: int
    diameter_bound: int


def girth_nullity_bound(g):
    """Corrected girth bound on the nullity; raises for forests."""
    gi = girth(g)
    if gi is ACYCLIC:
        raise AcyclicError("the girth bound needs at least one cycle")
    return g.n - gi + 2 if gi % 4 == 0 else g.n - gi


def nullity_bounds(g):
    """All nullity bounds in one report; see :class:`NullityBounds`."""
    if not is_connected(g):
        raise DisconnectedError("bounds assume a connected graph")
    gi = girth(g)
    if gi is ACYCLIC:
        gb = gbn = None
        gi_val = None
    else:
        gi_val = gi
        gb = g.n - gi + 2 if gi % 4 == 0 else g.n - gi
        gbn = g.n - 2 * gi + 2 if gi % 4 == 0 else g.n - 2 * gi
    dia = diameter(g)
    db = g.n - dia if dia % 2 == 0 else g.n - dia - 1
    return NullityBounds(
        nullity=nullity(g),
        girth=gi_val,
        girth_bound=gb,
        girth_bound_naive=gbn,
        diameter=dia,
        diameter_bound=db,
    )


def lieb_total_spin(g):
    """Ground-state total spin of the half-filled bipartite repulsive model:
    half the absolute sublattice imbalance.

    Raises
    ------
    NotBipartiteError, DisconnectedError, OddNodeCountError
        The theorem needs a connected bipartite graph with an even number
        of sites.
    """
    if not is_connected(g):
        raise DisconnectedError("total spin rule assumes a connected graph")
    parts = bipartition(g)
    if parts is None:
        raise NotBipartiteError("total spin rule needs a bipartite graph")
    if g.n % 2:
        raise OddNodeCountError("half filling needs an even number of sites")
    v1, v2 = parts
    return Fraction(abs(len(v1) - len(v2)), 2)


# ---------------------------------------------------------------------------
# honeycomb patches
# ---------------------------------------------------------------------------

def benzenoid_graph(centers):
    """Graph of fused hexagonal rings.

    ``centers`` are axial coordinates (q, r) of the rings; rings at axial
    distance one share an edge.  Vertices are deduplicated geometrically.
    """
    sqrt3 = math.sqrt(3.0)
    points = {}

    def key(x, y):
        return (round(x, 6), round(y, 6))

    coords = []
    for q, r in centers:
        cx = sqrt3 * (q + r / 2.0)
        cy = 1.5 * r
        for k in range(6):
            ang = math.pi / 6.0 + k * math.pi / 3.0
            x, y = cx + math.cos(ang), cy + math.sin(ang)
            if key(x, y) not in points:
                points[key(x, y)] = len(coords)
                coords.append((x, y))
    edges = set()
    ids = list(points.values())
    for i in ids:
        for j in ids:
            if i < j:
                dx = coords[i][0] - coords[j][0]
                dy = coords[i][1] - coords[j][1]
                if abs(dx * dx + dy * dy - 1.0) < 1e-6:
                    edges.add((i, j))
    return Graph(len(coords), sorted(edges))


def polyacene_graph(n_rings):
    """Linear chain of fused hexagons (benzene, naphthalene, ...)."""
    if n_rings < 1:
        raise OutOfRangeError("need at least one ring")
    return benzenoid_graph([(q, 0) for q in range(n_rings)])


def pyrene_graph():
    """Compact 2x2 patch of four rings: 16 sites, balanced sublattices."""
    return benzenoid_graph([(0, 0), (1, 0), (0, 1), (1, 1)])


def triangulene_graph():
    """Triangular patch of six rings: 22 sites, sublattice imbalance 2."""
    return benzenoid_graph([(0, 0), (1, 0), (2, 0), (0, 1), (1, 1), (0, 2)])
