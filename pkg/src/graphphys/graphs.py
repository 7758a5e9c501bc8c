"""Graph container and classical structure measures.

The :class:`Graph` type is deliberately small: integer nodes ``0..n-1``, an
edge list with optional positive weights and multiplicities, and flags for
directedness and simplicity.  Matrices are plain dense numpy arrays; every
measure in this module (distances, clustering, girth, components,
bipartiteness, matchings) treats the graph as unweighted structure, while
the matrix builders carry weights for the modules that need them.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass

import numpy as np

from .errors import (
    DirectedUnsupportedError,
    DisconnectedError,
    DuplicateEdgeError,
    NotBipartiteError,
    OutOfRangeError,
    SelfLoopError,
)

__all__ = [
    "Graph",
    "Edge",
    "DistanceMatrix",
    "ACYCLIC",
    "UNREACHABLE",
    "build_graph",
    "adjacency_matrix",
    "degree_matrix",
    "laplacian_matrix",
    "incidence_matrix",
    "shortest_path_distances",
    "average_path_length",
    "clustering",
    "ClusteringReport",
    "girth",
    "diameter",
    "eccentricities",
    "connected_components",
    "strongly_connected_components",
    "is_connected",
    "bipartition",
    "is_bipartite",
    "maximum_bipartite_matching",
    "path_graph",
    "cycle_graph",
    "complete_graph",
    "star_graph",
    "complete_bipartite_graph",
]

UNREACHABLE = -1


@dataclass(frozen=True)
class Edge:
    """A single edge: endpoints, positive weight, and multiplicity."""

    u: int
    v: int
    weight: float = 1.0
    mult: int = 1


class _Acyclic:
    """Sentinel returned by :func:`girth` for forests (no cycle at all)."""

    __slots__ = ()

    def __repr__(self):
        return "Acyclic"


ACYCLIC = _Acyclic()


class Graph:
    """Finite graph on nodes ``0..n-1``.

    Parameters
    ----------
    n : int
        Number of nodes.
    edges : iterable
        Items are ``(u, v)``, ``(u, v, weight)`` or ``(u, v, weight, mult)``.
        For undirected graphs the pair is stored canonically as
        ``(min(u, v), max(u, v))``.
    directed : bool
        Edge (u, v) is the arc u -> v when set.
    simple : bool
        Reject parallel edges and multiplicities > 1.  Self-loops are
        rejected always; the polynomial modules have their own multigraph
        types that support loops where loops actually matter.
    """

    __slots__ = ("n", "directed", "simple", "edges", "_adj")

    def __init__(self, n, edges=(), directed=False, simple=True):
        if n < 0:
            raise OutOfRangeError(f"node count must be >= 0, got {n}")
        self.n = int(n)
        self.directed = bool(directed)
        self.simple = bool(simple)
        seen = set()
        stored = []
        for item in edges:
            if isinstance(item, Edge):
                u, v, w, mult = item.u, item.v, item.weight, item.mult
            else:
                u, v = item[0], item[1]
                w = item[2] if len(item) > 2 else 1.0
                mult = item[3] if len(item) > 3 else 1
            u, v = int(u), int(v)
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise OutOfRangeError(f"edge ({u}, {v}) outside 0..{self.n - 1}")
            if u == v:
                raise SelfLoopError(f"self-loop at node {u}")
            if mult < 1:
                raise OutOfRangeError(f"multiplicity must be >= 1, got {mult}")
            if not self.directed and u > v:
                u, v = v, u
            if self.simple:
                if mult != 1:
                    raise DuplicateEdgeError(
                        f"multiplicity {mult} on ({u}, {v}) in a simple graph"
                    )
                if (u, v) in seen:
                    raise DuplicateEdgeError(f"duplicate edge ({u}, {v})")
                seen.add((u, v))
            stored.append(Edge(u, v, float(w), int(mult)))
        self.edges = tuple(stored)
        self._adj = None

    @property
    def m(self):
        """Number of edges, counting multiplicities."""
        return sum(e.mult for e in self.edges)

    def neighbors(self, u):
        """Out-neighbors of ``u`` (all neighbors when undirected)."""
        return self._adjacency_lists()[u]

    def _adjacency_lists(self):
        if self._adj is None:
            adj = [[] for _ in range(self.n)]
            for e in self.edges:
                adj[e.u].append(e.v)
                if not self.directed:
                    adj[e.v].append(e.u)
            self._adj = adj
        return self._adj

    def degree_sequence(self):
        """Unweighted degrees (out+in for directed graphs), with multiplicity."""
        deg = np.zeros(self.n, dtype=np.int64)
        for e in self.edges:
            deg[e.u] += e.mult
            deg[e.v] += e.mult
        return deg

    def __repr__(self):
        kind = "digraph" if self.directed else "graph"
        return f"<{kind} n={self.n} m={self.m}>"


def build_graph(n, edges=(), directed=False, simple=True):
    """Build a :class:`Graph`; see the class docstring for edge syntax."""
    return Graph(n, edges, directed=directed, simple=simple)


# ---------------------------------------------------------------------------
# matrices
# ---------------------------------------------------------------------------

def adjacency_matrix(g, weighted=True):
    """Dense adjacency matrix; symmetric for undirected graphs.

    Entry (u, v) accumulates weight * multiplicity over parallel edges, or
    just multiplicity when ``weighted`` is false.
    """
    a = np.zeros((g.n, g.n))
    for e in g.edges:
        w = (e.weight if weighted else 1.0) * e.mult
        a[e.u, e.v] += w
        if not g.directed:
            a[e.v, e.u] += w
    return a


def degree_matrix(g, weighted=True):
    """Diagonal matrix of adjacency row sums."""
    a = adjacency_matrix(g, weighted=weighted)
    return np.diag(a.sum(axis=1))


def laplacian_matrix(g, weighted=True):
    """Combinatorial Laplacian ``L = K - A`` (undirected only).

    Rows and columns sum to zero and L is positive semidefinite; the
    multiplicity of its zero eigenvalue equals the number of connected
    components.
    """
    if g.directed:
        raise DirectedUnsupportedError("Laplacian is defined here for undirected graphs")
    a = adjacency_matrix(g, weighted=weighted)
    return np.diag(a.sum(axis=1)) - a


def incidence_matrix(g, orientation=None):
    """Oriented node-edge incidence matrix (undirected graphs).

    Each edge becomes a column with +1 at its head and -1 at its tail.  By
    default edge ``(u, v)`` points u -> v; ``orientation`` may give a +-1
    flip per edge.  For every choice of orientation the product with its
    own transpose is the Laplacian (for unit weights).
    """
    if g.directed:
        raise DirectedUnsupportedError("incidence orientation applies to undirected graphs")
    cols = []
    for e in g.edges:
        cols.extend([(e.u, e.v)] * e.mult)
    grad = np.zeros((g.n, len(cols)))
    for j, (u, v) in enumerate(cols):
        sign = 1.0
        if orientation is not None:
            sign = float(orientation[j])
            if sign not in (-1.0, 1.0):
                raise OutOfRangeError("orientation entries must be +-1")
        grad[u, j] = sign
        grad[v, j] = -sign
    return grad


# ---------------------------------------------------------------------------
# distances
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class DistanceMatrix:
    """All-pairs hop counts with ``UNREACHABLE`` (-1) marking absent paths."""

    hops: np.ndarray

    def distance(self, u, v):
        """Hop count u -> v, or ``math.inf`` when unreachable."""
        d = int(self.hops[u, v])
        return math.inf if d == UNREACHABLE else d

    def all_reachable(self):
        return not np.any(self.hops == UNREACHABLE)


def _bfs(adj, source, n):
    dist = np.full(n, UNREACHABLE, dtype=np.int64)
    dist[source] = 0
    q = deque([source])
    while q:
        u = q.popleft()
        du = dist[u]
        for v in adj[u]:
            if dist[v] == UNREACHABLE:
                dist[v] = du + 1
                q.append(v)
    return dist


def shortest_path_distances(g):
    """Breadth-first hop counts between all node pairs (edges count 1 each).

    Directed graphs use directed reachability, so the result need not be
    symmetric.
    """
    adj = g._adjacency_lists()
    hops = np.empty((g.n, g.n), dtype=np.int64)
    for s in range(g.n):
        hops[s] = _bfs(adj, s, g.n)
    return DistanceMatrix(hops)


def average_path_length(g, dm=None):
    """Mean hop count over all ordered node pairs.

    Raises
    ------
    DisconnectedError
        If any ordered pair is unreachable.
    """
    if g.n < 2:
        return 0.0
    if dm is None:
        dm = shortest_path_distances(g)
    if not dm.all_reachable():
        raise DisconnectedError("average path length needs every pair reachable")
    return float(dm.hops.sum()) / (g.n * (g.n - 1))


def eccentricities(g, dm=None):
    """Per-node greatest hop count; needs all pairs reachable."""
    if dm is None:
        dm = shortest_path_distances(g)
    if not dm.all_reachable():
        raise DisconnectedError("eccentricity needs every pair reachable")
    return dm.hops.max(axis=1)


def diameter(g, dm=None):
    """Greatest hop count over all pairs; needs all pairs reachable."""
    return int(eccentricities(g, dm).max()) if g.n else 0


# ---------------------------------------------------------------------------
# clustering
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ClusteringReport:
    """Per-node coefficients, their mean, and the global transitivity."""

    per_node: np.ndarray
    average: float
    transitivity: float
    triangles: int
    wedges: int


def clustering(g):
    """Local clustering coefficients and the triangle/wedge transitivity.

    The local coefficient of node i is the number of edges among its
    neighbors divided by k_i (k_i - 1) / 2 (zero when k_i <= 1); the global
    transitivity is three times the triangle count over the number of
    two-paths.
    """
    if g.directed:
        raise DirectedUnsupportedError("clustering is defined for undirected graphs")
    a = (adjacency_matrix(g, weighted=False) > 0).astype(float)
    k = a.sum(axis=1)
    closed = (a @ a) * a            # row i sums to twice the triangles at i
    tri_at = closed.sum(axis=1) / 2.0
    denom = k * (k - 1) / 2.0
    per_node = np.where(denom > 0, tri_at / np.where(denom > 0, denom, 1.0), 0.0)
    triangles = int(round(closed.sum() / 6.0))
    wedges = int(round((k * (k - 1) / 2.0).sum()))
    transitivity = 3.0 * triangles / wedges if wedges else 0.0
    return ClusteringReport(
        per_node=per_node,
        average=float(per_node.mean()) if g.n else 0.0,
        transitivity=float(transitivity),
        triangles=triangles,
        wedges=wedges,
    )


# ---------------------------------------------------------------------------
# girth
# ---------------------------------------------------------------------------

def girth(g):
    """Length of a shortest cycle, or the ``ACYCLIC`` sentinel.

    Parallel edges (multiplicity >= 2 on an undirected edge) form a cycle
    of length 2.  Directed graphs use directed cycles; a digon counts 2.
    """
    if g.directed:
        return _directed_girth(g)
    if any(e.mult > 1 for e in g.edges):
        return 2
    adj = g._adjacency_lists()
    best = math.inf
    for root in range(g.n):
        dist = {root: 0}
        parent = {root: -1}
        q = deque([root])
        while q:
            u = q.popleft()
            if 2 * dist[u] >= best:
                continue  # any cycle closed from here is >= best already
            for v in adj[u]:
                if v not in dist:
                    dist[v] = dist[u] + 1
                    parent[v] = u
                    q.append(v)
                elif parent[u] != v:
                    best = min(best, dist[u] + dist[v] + 1)
    return ACYCLIC if math.isinf(best) else int(best)


def _directed_girth(g):
    adj = g._adjacency_lists()
    best = math.inf
    for e in g.edges:
        # shortest path v -> u closes a cycle through arc u -> v
        dist = _bfs(adj, e.v, g.n)
        if dist[e.u] != UNREACHABLE:
            best = min(best, int(dist[e.u]) + 1)
    return ACYCLIC if math.isinf(best) else int(best)


# ---------------------------------------------------------------------------
# components and bipartiteness
# ---------------------------------------------------------------------------

def connected_components(g):
    """Node sets of the (weak, for digraphs) connected components.

    Components are sorted by their smallest member; nodes inside a
    component are sorted ascending.
    """
    adj = [[] for _ in range(g.n)]
    for e in g.edges:
        adj[e.u].append(e.v)
        adj[e.v].append(e.u)
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        comp = []
        q = deque([s])
        seen[s] = True
        while q:
            u = q.popleft()
            comp.append(u)
            for v in adj[u]:
                if not seen[v]:
                    seen[v] = True
                    q.append(v)
        comps.append(sorted(comp))
    return comps


def is_connected(g, strong=False):
    """True when one (strongly, if asked) connected component covers the graph."""
    if g.n == 0:
        return True
    if strong and g.directed:
        return len(strongly_connected_components(g)) == 1
    return len(connected_components(g)) == 1


def strongly_connected_components(g):
    """Tarjan's strongly connected components (iterative), sorted as in
    :func:`connected_components`.  Undirected graphs fall back to ordinary
    components."""
    if not g.directed:
        return connected_components(g)
    adj = g._adjacency_lists()
    n = g.n
    index = [-1] * n
    low = [0] * n
    on_stack = [False] * n
    stack = []
    comps = []
    counter = 0
    for root in range(n):
        if index[root] != -1:
            continue
        work = [(root, 0)]
        while work:
            u, pi = work[-1]
            if pi == 0:
                index[u] = low[u] = counter
                counter += 1
                stack.append(u)
                on_stack[u] = True
            advanced = False
            for i in range(pi, len(adj[u])):
                v = adj[u][i]
                if index[v] == -1:
                    work[-1] = (u, i + 1)
                    work.append((v, 0))
                    advanced = True
                    break
                if on_stack[v]:
                    low[u] = min(low[u], index[v])
            if advanced:
                continue
            work.pop()
            if low[u] == index[u]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp.append(w)
                    if w == u:
                        break
                comps.append(sorted(comp))
            if work:
                pu = work[-1][0]
                low[pu] = min(low[pu], low[u])
    return sorted(comps, key=lambda c: c[0])


def bipartition(g):
    """Two-coloring of an undirected graph, or ``None`` when impossible.

    Returns ``(V1, V2)`` with ``len(V1) <= len(V2)``; inside each component
    the smallest node starts on the first side, which makes the output
    deterministic.
    """
    if g.directed:
        raise DirectedUnsupportedError("bipartition applies to undirected graphs")
    adj = g._adjacency_lists()
    color = [-1] * g.n
    for s in range(g.n):
        if color[s] != -1:
            continue
        color[s] = 0
        q = deque([s])
        while q:
            u = q.popleft()
            for v in adj[u]:
                if color[v] == -1:
                    color[v] = 1 - color[u]
                    q.append(v)
                elif color[v] == color[u]:
                    return None
    v1 = [u for u in range(g.n) if color[u] == 0]
    v2 = [u for u in range(g.n) if color[u] == 1]
    if len(v1) > len(v2):
        v1, v2 = v2, v1
    return v1, v2


def is_bipartite(g):
    return bipartition(g) is not None


def maximum_bipartite_matching(g):
    """Maximum matching of a bipartite graph by augmenting paths.

    Returns ``(size, edges)`` where edges are ``(u, v)`` pairs, u on the
    first side of the bipartition.

    Raises
    ------
    NotBipartiteError
        If the graph has an odd cycle.
    """
    parts = bipartition(g)
    if parts is None:
        raise NotBipartiteError("maximum matching here requires a bipartite graph")
    left, _ = parts
    left_set = set(left)
    adj = g._adjacency_lists()
    match_of = {}          # right node -> left node

    def try_augment(u, visited):
        for v in adj[u]:
            if v in visited:
                continue
            visited.add(v)
            if v not in match_of or try_augment(match_of[v], visited):
                match_of[v] = u
                return True
        return False

    for u in left:
        try_augment(u, set())
    edges = sorted((u, v) if u in left_set else (v, u) for v, u in match_of.items())
    return len(edges), edges


# ---------------------------------------------------------------------------
# small deterministic families
# ---------------------------------------------------------------------------

def path_graph(n):
    """Path on n nodes: 0 - 1 - ... - (n-1)."""
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n):
    """Cycle on n >= 3 nodes."""
    if n < 3:
        raise OutOfRangeError("a cycle needs at least 3 nodes")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n):
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def star_graph(k):
    """Star with center 0 and k leaves."""
    return Graph(k + 1, [(0, i) for i in range(1, k + 1)])


def complete_bipartite_graph(a, b):
    """Complete bipartite graph; the first `a` nodes form one side."""
    return Graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])
