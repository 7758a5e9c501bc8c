"""Random graph ensembles: samplers, theory curves, and degree-statistics
fitting.

Samplers accept ``seed`` as anything :func:`numpy.random.default_rng`
takes (int, SeedSequence, Generator).  For replica studies use
:func:`split_seed` to derive independent child seeds from one master
seed, so runs are reproducible and streams never collide.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DegenerateFitError, OutOfRangeError
from .graphs import Graph, is_connected
from .tutte import Multigraph

__all__ = [
    "split_seed",
    "erdos_renyi",
    "ERTheory",
    "er_theory",
    "giant_component_fraction",
    "semicircle_density",
    "semicircle_cdf",
    "ks_statistic",
    "watts_strogatz",
    "WSTheory",
    "ws_theory",
    "barabasi_albert",
    "BATheory",
    "ba_theory",
    "DegreeDistribution",
    "degree_distribution",
    "PowerLawFit",
    "fit_power_law",
]


def split_seed(seed, count):
    """Derive ``count`` independent child seeds from a master seed."""
    return list(np.random.SeedSequence(seed).spawn(count))


def erdos_renyi(n, p, seed=None):
    """Uniform independent-edge random graph G(n, p)."""
    if not 0.0 <= p <= 1.0:
        raise OutOfRangeError("edge probability must lie in [0, 1]")
    rng = np.random.default_rng(seed)
    rows, cols = np.triu_indices(n, k=1)
    mask = rng.random(rows.size) < p
    edges = list(zip(rows[mask].tolist(), cols[mask].tolist()))
    return Graph(n, edges)


@dataclass(frozen=True)
class ERTheory:
    """Large-n expectations for G(n, p).

    ``path_length`` uses the branching estimate
    ``(ln n - 0.5772...) / ln(pn) + 1/2`` and is NaN when ``pn <= 1``;
    ``clustering`` equals p exactly; ``giant_fraction`` solves the
    self-consistency equation for the largest component.
    """

    n: int
    p: float
    mean_degree: float
    expected_edges: float
    clustering: float
    path_length: float
    giant_fraction: float
    regime: str


def er_theory(n, p):
    c = p * (n - 1)
    pn = p * n
    if pn > 1.0:
        path = (math.log(n) - np.euler_gamma) / math.log(pn) + 0.5
    else:
        path = math.nan
    if pn < 1.0:
        regime = "subcritical"
    elif p < math.log(n) / n:
        regime = "supercritical"
    else:
        regime = "connected"
    return ERTheory(
        n=n,
        p=p,
        mean_degree=c,
        expected_edges=p * n * (n - 1) / 2.0,
        clustering=p,
        path_length=path,
        giant_fraction=giant_component_fraction(pn),
        regime=regime,
    )


def giant_component_fraction(mean_degree, tol=1e-12):
    """Fraction of nodes in the giant component: the positive root of
    ``f = 1 - exp(-c f)``; zero at or below the threshold c = 1."""
    c = mean_degree
    if c <= 1.0:
        return 0.0
    lo, hi = tol, 1.0
    # g(f) = 1 - exp(-c f) - f is positive just above 0 and negative at 1
    while hi - lo > tol:
        mid = (lo + hi) / 2.0
        if 1.0 - math.exp(-c * mid) - mid > 0.0:
            lo = mid
        else:
            hi = mid
    return (lo + hi) / 2.0


def _semicircle_radius(n, p):
    variance = n * p * (1.0 - p)
    if variance <= 0:
        raise OutOfRangeError("need 0 < p < 1 and n > 0 for a spectral band")
    return math.sqrt(variance)


def semicircle_density(lam, n, p):
    """Limiting bulk density of adjacency eigenvalues of G(n, p):
    a semicircle of radius ``2 sqrt(np(1-p))`` (the Perron outlier near
    ``np`` is excluded from the bulk)."""
    r = _semicircle_radius(n, p)
    lam = np.asarray(lam, dtype=float)
    inside = np.abs(lam) <= 2.0 * r
    out = np.zeros_like(lam)
    out[inside] = np.sqrt(4.0 * r * r - lam[inside] ** 2) / (2.0 * math.pi * r * r)
    return out if out.ndim else float(out)


def semicircle_cdf(lam, n, p):
    """Cumulative form of :func:`semicircle_density`."""
    r = 2.0 * _semicircle_radius(n, p)
    lam = np.asarray(lam, dtype=float)
    x = np.clip(lam, -r, r)
    cdf = 0.5 + x * np.sqrt(r * r - x * x) / (math.pi * r * r) + np.arcsin(x / r) / math.pi
    return cdf if cdf.ndim else float(cdf)


def ks_statistic(values, cdf):
    """Kolmogorov-Smirnov distance between a sample and a theoretical CDF
    (callable on an array of sorted sample points)."""
    data = np.sort(np.asarray(values, dtype=float))
    n = data.size
    theory = np.asarray(cdf(data), dtype=float)
    grid = np.arange(n + 1) / n
    return float(max(np.max(theory - grid[:-1]), np.max(grid[1:] - theory)))


def watts_strogatz(n, k, p, seed=None):
    """Small-world rewiring of a ring lattice.

    Start from a ring where each node links to its k/2 nearest neighbours
    per side; then scan lattice distances j = 1..k/2 and nodes in order,
    rewiring the far end of each ring edge with probability p to a
    uniformly random non-neighbour.  k must be even, with ``n > k``.
    """
    if k % 2 != 0 or k < 2:
        raise OutOfRangeError("coordination number k must be even and >= 2")
    if n <= k:
        raise OutOfRangeError("need n > k for a ring lattice")
    if not 0.0 <= p <= 1.0:
        raise OutOfRangeError("rewiring probability must lie in [0, 1]")
    rng = np.random.default_rng(seed)
    adj = [set() for _ in range(n)]
    for j in range(1, k // 2 + 1):
        for i in range(n):
            w = (i + j) % n
            adj[i].add(w)
            adj[w].add(i)
    for j in range(1, k // 2 + 1):
        for i in range(n):
            if rng.random() >= p:
                continue
            old = (i + j) % n
            if old not in adj[i] or len(adj[i]) >= n - 1:
                continue
            while True:
                new = int(rng.integers(n))
                if new != i and new not in adj[i]:
                    break
            adj[i].remove(old)
            adj[old].remove(i)
            adj[i].add(new)
            adj[new].add(i)
    edges = [(u, v) for u in range(n) for v in adj[u] if u < v]
    return Graph(n, edges)


@dataclass(frozen=True)
class WSTheory:
    """Ring-lattice reference values for the small-world model.

    ``clustering_ring`` is exact for ``n >= 2k + 1``; the path length is
    the large-ring estimate ``(n - 1)(n + k - 1) / (2 k n)``.  After
    rewiring with probability p the clustering decays approximately as
    ``(1 - p)^3`` (each triangle needs three surviving edges).
    """

    n: int
    k: int
    clustering_ring: float
    path_length_ring: float

    def clustering_after_rewiring(self, p):
        return self.clustering_ring * (1.0 - p) ** 3


def ws_theory(n, k):
    if k % 2 != 0 or k < 2:
        raise OutOfRangeError("coordination number k must be even and >= 2")
    clustering = 0.0 if k == 2 else 3.0 * (k - 2) / (4.0 * (k - 1))
    path = (n - 1) * (n + k - 1) / (2.0 * k * n)
    return WSTheory(n=n, k=k, clustering_ring=clustering, path_length_ring=path)


def _growth_attachment(n, d, rng):
    m0 = d + 1
    while True:
        seed_graph = erdos_renyi(m0, 0.5, rng)
        if is_connected(seed_graph):
            break
    edges = [(e.u, e.v) for e in seed_graph.edges]
    # Each edge endpoint appears once per incidence, so uniform draws from
    # this list realize degree-proportional attachment.
    endpoints = []
    for u, v in edges:
        endpoints.append(u)
        endpoints.append(v)
    for v in range(m0, n):
        chosen = set()
        while len(chosen) < d:
            chosen.add(endpoints[int(rng.integers(len(endpoints)))])
        for u in chosen:
            edges.append((u, v))
            endpoints.append(u)
            endpoints.append(v)
    return Graph(n, edges)


def _contracted_pairing(n, d, rng, simplify):
    total = n * d
    stubs = []
    mini_edges = []
    for i in range(1, total + 1):
        r = int(rng.integers(2 * i - 1))
        target = i - 1 if r == 2 * i - 2 else stubs[r]
        mini_edges.append((i - 1, target))
        stubs.append(i - 1)
        stubs.append(target)
    edges = [(u // d, v // d) for u, v in mini_edges]
    if not simplify:
        return Multigraph(n, edges)
    seen = set()
    simple_edges = []
    for u, v in edges:
        if u == v:
            continue
        key = (min(u, v), max(u, v))
        if key not in seen:
            seen.add(key)
            simple_edges.append(key)
    return Graph(n, simple_edges)


def barabasi_albert(n, d, seed=None, variant="growth", simplify=False):
    """Preferential-attachment scale-free graph with d edges per arrival.

    ``variant="growth"`` grows from a small connected seed graph, each new
    node attaching to d distinct existing nodes with probability
    proportional to degree; the result is simple and connected.

    ``variant="contracted"`` runs the one-edge-per-step process in which
    step i attaches to an endpoint drawn from all previous edge ends (or
    itself with weight one), then merges every d consecutive mini-nodes.
    This version produces self-loops and parallel edges and so returns a
    multigraph unless ``simplify=True`` collapses it.
    """
    if d < 1:
        raise OutOfRangeError("need at least one edge per new node")
    if n <= d + 1:
        raise OutOfRangeError("need n > d + 1 nodes")
    rng = np.random.default_rng(seed)
    if variant == "growth":
        return _growth_attachment(n, d, rng)
    if variant == "contracted":
        return _contracted_pairing(n, d, rng, simplify)
    raise OutOfRangeError(f"unknown variant {variant!r}")


@dataclass(frozen=True)
class BATheory:
    """Asymptotics of preferential attachment with parameter d.

    ``degree_probability`` is the stationary law
    ``2 d (d + 1) / (k (k + 1) (k + 2))`` for ``k >= d``, which sums to
    one; ``pk_constant_alternate`` records the variant constant
    ``2 d (d - 1)`` sometimes quoted, which does not normalize and is
    kept only for comparison.  The tail exponent is 3.
    """

    n: int
    d: int
    degree_exponent: float
    pk_constant: float
    pk_constant_alternate: float
    clustering_estimate: float
    path_length_estimate: float

    def degree_probability(self, k):
        k = np.asarray(k, dtype=float)
        out = np.where(
            k >= self.d,
            self.pk_constant / (k * (k + 1.0) * (k + 2.0)),
            0.0,
        )
        return out if out.ndim else float(out)


def ba_theory(n, d):
    if d < 1:
        raise OutOfRangeError("need d >= 1")
    log_n = math.log(n)
    if d >= 2:
        path = (log_n - math.log(d / 2.0) - 1.0 - np.euler_gamma) / (
            math.log(log_n) + math.log(d / 2.0)
        ) + 1.5
    else:
        path = math.nan
    return BATheory(
        n=n,
        d=d,
        degree_exponent=3.0,
        pk_constant=2.0 * d * (d + 1.0),
        pk_constant_alternate=2.0 * d * (d - 1.0),
        clustering_estimate=(d - 1.0) / 8.0 * log_n * log_n / n,
        path_length_estimate=path,
    )


@dataclass(frozen=True)
class DegreeDistribution:
    """Empirical degree histogram with its complementary cumulative tail.

    ``k`` holds the sorted distinct degrees; ``pdf[i]`` the fraction of
    nodes with degree ``k[i]``; ``ccdf[i]`` the fraction with degree at
    least ``k[i]`` (so the smallest entry has CCDF 1 by construction).
    """

    k: np.ndarray
    counts: np.ndarray
    pdf: np.ndarray
    ccdf: np.ndarray
    n_nodes: int

    @classmethod
    def from_degrees(cls, degrees):
        degrees = np.asarray(list(degrees), dtype=np.int64)
        if degrees.size == 0:
            raise OutOfRangeError("no degrees to tabulate")
        k, counts = np.unique(degrees, return_counts=True)
        pdf = counts / degrees.size
        ccdf = np.cumsum(pdf[::-1])[::-1]
        return cls(k=k, counts=counts, pdf=pdf, ccdf=ccdf, n_nodes=int(degrees.size))

    def mean(self):
        return float(np.dot(self.k, self.pdf))


def _degrees_of(g):
    if isinstance(g, Multigraph):
        deg = [0] * g.n
        for u, v in g.edges:
            if u == v:
                deg[u] += 2
            else:
                deg[u] += 1
                deg[v] += 1
        return deg
    return g.degree_sequence()


def degree_distribution(g):
    """Tabulate the degree histogram of a graph or multigraph (self-loops
    add two to their node's degree)."""
    return DegreeDistribution.from_degrees(_degrees_of(g))


@dataclass(frozen=True)
class PowerLawFit:
    """Least-squares straight line through the log-log CCDF.

    For a density ``p(k) ~ k^-gamma`` the CCDF falls as ``k^(1-gamma)``,
    so the tail exponent is recovered as ``gamma = 1 - slope``.
    """

    gamma: float
    slope: float
    intercept: float
    k_min: int
    k_max: int
    n_points: int


def fit_power_law(dist, k_min, k_max=None):
    """Fit the degree-distribution tail over ``k_min <= k <= k_max``."""
    mask = (dist.k >= k_min) & (dist.ccdf > 0)
    if k_max is not None:
        mask &= dist.k <= k_max
    ks = dist.k[mask]
    if ks.size < 3:
        raise DegenerateFitError(
            f"need at least 3 tail points to fit, found {ks.size}"
        )
    x = np.log10(ks.astype(float))
    y = np.log10(dist.ccdf[mask])
    slope, intercept = np.polyfit(x, y, 1)
    return PowerLawFit(
        gamma=float(1.0 - slope),
        slope=float(slope),
        intercept=float(intercept),
        k_min=int(ks.min()),
        k_max=int(ks.max()),
        n_points=int(ks.size),
    )
