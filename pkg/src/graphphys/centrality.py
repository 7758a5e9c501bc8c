"""Node importance measures.

Everything returns a :class:`CentralityVector` whose ``scores`` array is
indexed by node.  Undirected and directed graphs are both supported where
the measure is well defined; directed variants state their orientation
convention in the docstring.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
import scipy.linalg

from .errors import (
    DisconnectedError,
    EtaTooSmallError,
    NoConvergenceError,
    OutOfRangeError,
)
from .graphs import (
    Graph,
    adjacency_matrix,
    is_connected,
    shortest_path_distances,
)
from .spectral import adjacency_spectrum

__all__ = [
    "CentralityVector",
    "degree_centrality",
    "closeness_centrality",
    "betweenness_centrality",
    "katz_centrality",
    "eigenvector_centrality",
    "pagerank",
    "subgraph_centrality",
]


@dataclass(frozen=True)
class CentralityVector:
    """A per-node score array plus the parameters that produced it."""

    name: str
    scores: np.ndarray
    params: dict = field(default_factory=dict)
    warning: str | None = None

    def ranking(self):
        """Node indices from highest to lowest score (ties by index)."""
        return sorted(range(len(self.scores)), key=lambda i: (-self.scores[i], i))


def degree_centrality(g, direction="total"):
    """Connection counts.  ``direction`` picks ``"in"``, ``"out"`` or
    ``"total"``; for undirected graphs all three agree."""
    if direction not in ("in", "out", "total"):
        raise OutOfRangeError(f"unknown direction {direction!r}")
    out_deg = np.zeros(g.n)
    in_deg = np.zeros(g.n)
    for e in g.edges:
        out_deg[e.u] += e.mult
        in_deg[e.v] += e.mult
        if not g.directed:
            out_deg[e.v] += e.mult
            in_deg[e.u] += e.mult
    if direction == "out":
        scores = out_deg
    elif direction == "in":
        scores = in_deg
    else:
        scores = out_deg if not g.directed else out_deg + in_deg
    return CentralityVector("degree", scores, {"direction": direction})


def closeness_centrality(g):
    """``(n - 1)`` over the sum of hop distances from each node.  Requires
    every node to reach every other (strong connectivity when directed)."""
    dm = shortest_path_distances(g)
    if not dm.all_reachable():
        raise DisconnectedError("closeness needs every node to reach every other")
    sums = dm.hops.sum(axis=1)
    scores = (g.n - 1) / sums if g.n > 1 else np.ones(1)
    return CentralityVector("closeness", np.asarray(scores, dtype=float))


def betweenness_centrality(g):
    """Fraction-of-shortest-paths load on each interior node, by the
    dependency-accumulation algorithm.  Undirected pairs are counted once;
    directed graphs count ordered pairs.  Endpoints are excluded."""
    n = g.n
    adj = [sorted(g.neighbors(v)) for v in range(n)]
    scores = np.zeros(n)
    for source in range(n):
        stack = []
        preds = [[] for _ in range(n)]
        sigma = np.zeros(n)
        sigma[source] = 1.0
        dist = np.full(n, -1)
        dist[source] = 0
        queue = [source]
        head = 0
        while head < len(queue):
            v = queue[head]
            head += 1
            stack.append(v)
            for w in adj[v]:
                if dist[w] < 0:
                    dist[w] = dist[v] + 1
                    queue.append(w)
                if dist[w] == dist[v] + 1:
                    sigma[w] += sigma[v]
                    preds[w].append(v)
        delta = np.zeros(n)
        while stack:
            w = stack.pop()
            for v in preds[w]:
                delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w])
            if w != source:
                scores[w] += delta[w]
    if not g.directed:
        scores /= 2.0
    return CentralityVector("betweenness", scores)


def _spectral_radius(a):
    return float(np.max(np.abs(np.linalg.eigvals(a))))


def katz_centrality(g, eta, direction="out"):
    """Attenuated walk counts ``[(I - A/eta)^{-1} - I] 1``: node u scores
    the sum over all outgoing walks of ``eta^{-len}``.  ``direction="in"``
    counts incoming walks instead.  The attenuation ``eta`` must exceed
    the spectral radius of A or the series diverges."""
    a = adjacency_matrix(g)
    if direction == "in":
        a = a.T
    elif direction != "out":
        raise OutOfRangeError(f"unknown direction {direction!r}")
    rho = _spectral_radius(a)
    if eta <= rho * (1.0 + 1e-12) or eta <= 0:
        raise EtaTooSmallError(
            f"attenuation eta={eta} must exceed the spectral radius {rho:.6g}"
        )
    ones = np.ones(g.n)
    scores = np.linalg.solve(np.eye(g.n) - a / eta, ones) - ones
    return CentralityVector("katz", scores, {"eta": eta, "direction": direction})


def eigenvector_centrality(g, tol=1e-12, max_iter=100000):
    """Principal adjacency eigenvector, normalized to unit sum.

    Undirected graphs use the symmetric eigensolver.  Directed graphs use
    power iteration on A acting on incoming-edge scores (right eigenvector
    of A^T); a warning is attached when the graph is not strongly
    connected, since then the limit can concentrate on a subset of nodes.
    """
    if not g.directed:
        spec = adjacency_spectrum(g)
        vec = spec.vectors[:, 0].copy()
        if vec.sum() < 0:
            vec = -vec
        vec = np.abs(vec) if np.all(vec >= -tol) else vec
        return CentralityVector("eigenvector", vec / vec.sum())
    a = adjacency_matrix(g).T
    warning = None
    if not is_connected(g, strong=True):
        warning = "graph is not strongly connected; scores may concentrate on a subset"
    x = np.ones(g.n) / g.n
    for _ in range(int(max_iter)):
        y = a @ x
        norm = y.sum()
        if norm <= tol:
            raise NoConvergenceError("iteration collapsed to the zero vector")
        y /= norm
        if np.max(np.abs(y - x)) < tol:
            return CentralityVector("eigenvector", y, warning=warning)
        x = y
    raise NoConvergenceError(f"power iteration did not settle in {max_iter} steps")


def pagerank(g, alpha=0.85, tol=1e-12, max_iter=100000):
    """Stationary distribution of the damped random surfer.

    The walk follows out-edges uniformly with probability ``alpha`` and
    teleports uniformly otherwise; nodes without out-edges teleport
    always.  Iterates to a fixed point of the row-stochastic operator;
    the result sums to one.
    """
    if not (0 <= alpha < 1):
        raise OutOfRangeError("damping must satisfy 0 <= alpha < 1")
    n = g.n
    a = adjacency_matrix(g, weighted=False)
    if not g.directed:
        a = np.maximum(a, a.T)
    out = a.sum(axis=1)
    dangling = out == 0
    x = np.ones(n) / n
    for _ in range(int(max_iter)):
        follow = np.zeros(n)
        active = ~dangling
        if active.any():
            follow = (x[active] / out[active]) @ a[active]
        leak = x[dangling].sum()
        y = alpha * follow + (alpha * leak + (1.0 - alpha)) / n
        y /= y.sum()
        if np.max(np.abs(y - x)) < tol:
            return CentralityVector("pagerank", y, {"alpha": alpha})
        x = y
    raise NoConvergenceError(f"pagerank did not settle in {max_iter} steps")


def subgraph_centrality(g, kind="total"):
    """Diagonal of ``exp(A)``: each node's count of closed walks through
    itself, weighted by inverse factorial length.  ``kind`` restricts to
    ``"odd"`` or ``"even"`` walk lengths (sinh / cosh parts)."""
    if kind not in ("total", "odd", "even"):
        raise OutOfRangeError(f"unknown kind {kind!r}")
    a = adjacency_matrix(g)
    if g.directed:
        exp_a = scipy.linalg.expm(a)
        if kind == "total":
            mat = exp_a
        else:
            exp_neg = scipy.linalg.expm(-a)
            mat = (exp_a - exp_neg) / 2 if kind == "odd" else (exp_a + exp_neg) / 2
    else:
        spec = adjacency_spectrum(g)
        func = {"total": np.exp, "odd": np.sinh, "even": np.cosh}[kind]
        mat = spec.apply(func)
    return CentralityVector("subgraph", np.diag(mat).copy(), {"kind": kind})
