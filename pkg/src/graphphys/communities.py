"""Community structure and small-subgraph (motif) statistics.

Community detection offers the divisive edge-removal method driven by
edge betweenness, scored by modularity against the original graph, and
one-shot spectral bisection.  Motif tools count connected three-node
patterns -- two classes undirected, thirteen directed -- and judge their
over-representation against a degree-preserving rewired ensemble.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import (
    DegenerateEnsembleError,
    DirectedUnsupportedError,
    DisconnectedError,
    EmptyGraphError,
    OutOfRangeError,
)
from .graphs import Graph, adjacency_matrix, connected_components, laplacian_matrix
from .spectral import eig_symmetric

__all__ = [
    "edge_betweenness",
    "modularity",
    "GNLevel",
    "GNResult",
    "girvan_newman",
    "spectral_bisection",
    "cosine_similarity_matrix",
    "MotifCensus",
    "motif_census",
    "MOTIF_ALIASES",
    "MotifZScore",
    "motif_zscore",
]


def _edge_betweenness_lists(n, adj, directed):
    """Shortest-path load per edge from dependency accumulation."""
    scores = {}
    for source in range(n):
        stack = []
        preds = [[] for _ in range(n)]
        sigma = [0.0] * n
        sigma[source] = 1.0
        dist = [-1] * n
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
        delta = [0.0] * n
        while stack:
            w = stack.pop()
            for v in preds[w]:
                flow = sigma[v] / sigma[w] * (1.0 + delta[w])
                key = (v, w) if directed or v < w else (w, v)
                scores[key] = scores.get(key, 0.0) + flow
                delta[v] += flow
    if not directed:
        for key in scores:
            scores[key] /= 2.0
    return scores


def edge_betweenness(g):
    """Shortest-path betweenness of every edge, as a dict keyed by edge
    pair (canonical ``u < v`` when undirected).  Each unordered node pair
    contributes its path fraction once; directed graphs use ordered
    pairs."""
    adj = [sorted(g.neighbors(v)) for v in range(g.n)]
    scores = _edge_betweenness_lists(g.n, adj, g.directed)
    for e in g.edges:
        scores.setdefault((e.u, e.v), 0.0)
    return scores


def modularity(g, partition):
    """Quality of a node partition: observed minus expected within-group
    edge fractions, ``sum_k (e_k / m - (d_k / 2m)^2)``.

    ``partition`` is an iterable of node groups that must cover each node
    exactly once.  Edge multiplicities count; weights are ignored.  A
    graph with no edges has no modularity (raises
    :class:`EmptyGraphError`).
    """
    if g.directed:
        raise DirectedUnsupportedError("modularity is defined here for undirected graphs")
    groups = [tuple(sorted(part)) for part in partition]
    seen = [label for part in groups for label in part]
    if sorted(seen) != list(range(g.n)):
        raise OutOfRangeError("partition must cover every node exactly once")
    m = g.m
    if m == 0:
        raise EmptyGraphError("modularity needs at least one edge")
    label = {}
    for idx, part in enumerate(groups):
        for node in part:
            label[node] = idx
    inside = [0.0] * len(groups)
    degree = [0.0] * len(groups)
    for e in g.edges:
        degree[label[e.u]] += e.mult
        degree[label[e.v]] += e.mult
        if label[e.u] == label[e.v]:
            inside[label[e.u]] += e.mult
    return sum(
        inside[k] / m - (degree[k] / (2.0 * m)) ** 2 for k in range(len(groups))
    )


@dataclass(frozen=True)
class GNLevel:
    """One level of the divisive dendrogram: the communities present and
    their modularity on the original graph."""

    communities: tuple
    modularity: float


@dataclass(frozen=True)
class GNResult:
    """Full output of divisive edge-removal clustering.

    ``removals`` lists edges in deletion order; ``levels`` records every
    distinct component structure encountered (coarsest first), and
    ``best`` is the level with maximal modularity.
    """

    removals: tuple
    levels: tuple
    best: GNLevel

    @property
    def best_partition(self):
        return self.best.communities

    @property
    def best_modularity(self):
        return self.best.modularity


def girvan_newman(g):
    """Divisive clustering: repeatedly delete the edge carrying the most
    shortest-path traffic, recomputing betweenness after every deletion.

    Ties break toward the lexicographically smallest edge so runs are
    deterministic.  Each time the component count grows, the partition is
    scored with :func:`modularity` on the *original* graph.
    """
    if g.directed:
        raise DirectedUnsupportedError("divisive clustering expects an undirected graph")
    if g.m == 0:
        raise EmptyGraphError("nothing to cluster in an edgeless graph")
    adj = [set() for _ in range(g.n)]
    for e in g.edges:
        if e.mult != 1:
            raise OutOfRangeError("parallel edges are not supported here")
        adj[e.u].add(e.v)
        adj[e.v].add(e.u)

    def current_partition():
        comps = connected_components(Graph(g.n, _edges_of(adj)))
        return tuple(tuple(c) for c in comps)

    initial = current_partition()
    levels = [GNLevel(initial, modularity(g, initial))]
    removals = []
    n_comp = len(initial)
    remaining = g.m
    while remaining > 0:
        scores = _edge_betweenness_lists(
            g.n, [sorted(s) for s in adj], directed=False
        )
        top = max(scores.values())
        pick = min(edge for edge, val in scores.items() if val >= top - 1e-9)
        adj[pick[0]].discard(pick[1])
        adj[pick[1]].discard(pick[0])
        removals.append(pick)
        remaining -= 1
        part = current_partition()
        if len(part) > n_comp:
            n_comp = len(part)
            levels.append(GNLevel(part, modularity(g, part)))
    best = max(levels, key=lambda lv: lv.modularity)
    return GNResult(tuple(removals), tuple(levels), best)


def _edges_of(adj):
    return [(u, v) for u in range(len(adj)) for v in adj[u] if u < v]


def spectral_bisection(g, matrix="laplacian", tol=1e-12):
    """Split a connected graph in two by the sign pattern of the second
    eigenvector.

    ``matrix`` selects the operator: ``"laplacian"`` (second-smallest
    mode), ``"adjacency"`` (second-largest), or ``"normalized_laplacian"``
    (``D^{-1/2} L D^{-1/2}``, second-smallest).  Entries within ``tol`` of
    zero land on the nonnegative side.  Returns two sorted node tuples.
    """
    if g.directed:
        raise DirectedUnsupportedError("bisection expects an undirected graph")
    if len(connected_components(g)) != 1:
        raise DisconnectedError("bisection expects a connected graph")
    if matrix == "adjacency":
        spec = eig_symmetric(adjacency_matrix(g))
        vec = spec.vectors[:, 1]
    elif matrix == "laplacian":
        spec = eig_symmetric(laplacian_matrix(g))
        vec = spec.vectors[:, -2]
    elif matrix == "normalized_laplacian":
        lap = laplacian_matrix(g)
        inv_sqrt = 1.0 / np.sqrt(np.diag(lap))
        spec = eig_symmetric(lap * np.outer(inv_sqrt, inv_sqrt))
        vec = spec.vectors[:, -2]
    else:
        raise OutOfRangeError(f"unknown matrix {matrix!r}")
    pos = tuple(v for v in range(g.n) if vec[v] >= -tol)
    neg = tuple(v for v in range(g.n) if vec[v] < -tol)
    return pos, neg


def cosine_similarity_matrix(g):
    """Structural similarity of node pairs: the number of shared
    neighbours normalized by degree, ``(A^2)_ij / sqrt(k_i k_j)``.
    Isolated nodes get zero rows; diagonal entries are 1 for any node
    with neighbours."""
    if g.directed:
        raise DirectedUnsupportedError("similarity expects an undirected graph")
    a = adjacency_matrix(g, weighted=False)
    k = a.sum(axis=1)
    with np.errstate(divide="ignore"):
        scale = np.where(k > 0, 1.0 / np.sqrt(k), 0.0)
    return (a @ a) * np.outer(scale, scale)


# --- three-node pattern census -------------------------------------------

_PAIRS = ((0, 1), (0, 2), (1, 0), (1, 2), (2, 0), (2, 1))
_PERMS = tuple(itertools.permutations(range(3)))

#: Directed three-node classes, given by representative arc sets.  Codes
#: follow the standard dyad-census nomenclature: digits count mutual,
#: asymmetric and absent node pairs; letters split non-isomorphic cases
#: (D/U = arcs converge on / diverge from the distinguished pair,
#: C = cyclic arrangement, T = transitive).
_TRIAD_REPS = {
    "021D": ((1, 0), (1, 2)),
    "021U": ((0, 1), (2, 1)),
    "021C": ((0, 1), (1, 2)),
    "111D": ((0, 1), (1, 0), (2, 0)),
    "111U": ((0, 1), (1, 0), (0, 2)),
    "030T": ((0, 1), (0, 2), (1, 2)),
    "030C": ((0, 1), (1, 2), (2, 0)),
    "201": ((0, 1), (1, 0), (0, 2), (2, 0)),
    "120D": ((0, 1), (1, 0), (2, 0), (2, 1)),
    "120U": ((0, 1), (1, 0), (0, 2), (1, 2)),
    "120C": ((0, 1), (1, 0), (0, 2), (2, 1)),
    "210": ((0, 1), (1, 0), (0, 2), (2, 0), (1, 2)),
    "300": _PAIRS,
}

#: Friendly names for the directed patterns singled out in applications.
MOTIF_ALIASES = {
    "three_chain": "021C",
    "feedforward_loop": "030T",
    "feedback_loop": "030C",
}


def _mask_of(arcs):
    mask = 0
    for arc in arcs:
        mask |= 1 << _PAIRS.index(arc)
    return mask


def _canonical_mask(mask):
    best = None
    for perm in _PERMS:
        out = 0
        for bit, (a, b) in enumerate(_PAIRS):
            if mask >> bit & 1:
                out |= 1 << _PAIRS.index((perm[a], perm[b]))
        if best is None or out < best:
            best = out
    return best


def _build_triad_table():
    table = {}
    for name, arcs in _TRIAD_REPS.items():
        table[_canonical_mask(_mask_of(arcs))] = name
    if len(table) != 13:
        raise AssertionError("triad table collision")
    return table


_TRIAD_TABLE = _build_triad_table()


@dataclass(frozen=True)
class MotifCensus:
    """Counts of connected induced three-node subgraphs.

    Undirected graphs have two classes, ``two_path`` and ``triangle``;
    directed graphs have thirteen, keyed by dyad-census code (see
    :data:`MOTIF_ALIASES` for friendly names of the common ones).
    """

    directed: bool
    counts: dict = field(default_factory=dict)

    def count_of(self, motif):
        key = MOTIF_ALIASES.get(motif, motif)
        if key not in self.counts:
            raise OutOfRangeError(f"unknown motif {motif!r}")
        return self.counts[key]

    @property
    def total(self):
        return sum(self.counts.values())


def motif_census(g):
    """Tabulate every connected three-node induced subgraph."""
    if not g.directed:
        a = adjacency_matrix(g, weighted=False)
        if np.max(a, initial=0) > 1:
            raise OutOfRangeError("parallel edges are not supported here")
        triangles = int(round(np.trace(a @ a @ a) / 6.0))
        k = a.sum(axis=1)
        wedges = int(round(np.sum(k * (k - 1) / 2.0)))
        return MotifCensus(
            directed=False,
            counts={"two_path": wedges - 3 * triangles, "triangle": triangles},
        )
    arcs = set()
    under = [set() for _ in range(g.n)]
    for e in g.edges:
        if e.mult != 1:
            raise OutOfRangeError("parallel edges are not supported here")
        arcs.add((e.u, e.v))
        under[e.u].add(e.v)
        under[e.v].add(e.u)
    triples = set()
    for b in range(g.n):
        for a, c in itertools.combinations(sorted(under[b]), 2):
            triples.add(tuple(sorted((a, b, c))))
    counts = {name: 0 for name in _TRIAD_REPS}
    for trip in triples:
        mask = 0
        for bit, (i, j) in enumerate(_PAIRS):
            if (trip[i], trip[j]) in arcs:
                mask |= 1 << bit
        counts[_TRIAD_TABLE[_canonical_mask(mask)]] += 1
    return MotifCensus(directed=True, counts=counts)


# --- degree-preserving null model ----------------------------------------


def _double_edge_swap(edges, arc_set, directed, rng, attempts):
    """In-place randomization keeping every degree (in and out degrees,
    when directed) fixed."""
    m = len(edges)
    if m < 2:
        return
    for _ in range(attempts):
        i, j = rng.integers(m), rng.integers(m)
        if i == j:
            continue
        a, b = edges[i]
        c, d = edges[j]
        if directed:
            new1, new2 = (a, d), (c, b)
        else:
            if rng.random() < 0.5:
                c, d = d, c
            new1, new2 = (a, d), (c, b)
            new1 = (min(new1), max(new1))
            new2 = (min(new2), max(new2))
        if new1[0] == new1[1] or new2[0] == new2[1]:
            continue
        if new1 in arc_set or new2 in arc_set:
            continue
        if new1 == new2:
            continue
        arc_set.discard(edges[i])
        arc_set.discard(edges[j])
        edges[i], edges[j] = new1, new2
        arc_set.add(new1)
        arc_set.add(new2)


@dataclass(frozen=True)
class MotifZScore:
    """Over-representation of one motif against the randomized ensemble:
    ``(count - mean) / std`` with the sample standard deviation."""

    motif: str
    count: int
    mean: float
    std: float
    z: float
    samples: int


def motif_zscore(g, motif, samples=100, seed=None, swaps_per_edge=100):
    """Z-score of a motif count against degree-preserving rewirings.

    Each ensemble member starts from the observed graph and applies
    ``swaps_per_edge * m`` attempted pair swaps, preserving the degree
    sequence (both in- and out-degrees when directed).  A zero ensemble
    spread raises :class:`DegenerateEnsembleError`.
    """
    base = motif_census(g).count_of(motif)
    key = MOTIF_ALIASES.get(motif, motif)
    rng = np.random.default_rng(seed)
    observed = []
    start = [(e.u, e.v) for e in g.edges]
    attempts = swaps_per_edge * len(start)
    for _ in range(samples):
        edges = list(start)
        arc_set = set(edges)
        _double_edge_swap(edges, arc_set, g.directed, rng, attempts)
        sample = Graph(g.n, edges, directed=g.directed)
        observed.append(motif_census(sample).counts[key])
    mean = float(np.mean(observed))
    std = float(np.std(observed, ddof=1))
    if std == 0.0:
        raise DegenerateEnsembleError(
            f"ensemble count is constant at {mean}; z-score undefined"
        )
    return MotifZScore(
        motif=motif,
        count=base,
        mean=mean,
        std=std,
        z=(base - mean) / std,
        samples=samples,
    )
