"""Deletion-contraction graph polynomials and spin-model partition functions.

Exact integer arithmetic throughout: the Tutte polynomial lives in a tiny
bivariate polynomial class, the chromatic polynomial and the q-state
partition functions are derived from it symbolically, and a brute-force
state enumerator provides an independent route for cross-checking.

The computation operates on :class:`Multigraph`, which (unlike
:class:`~graphphys.graphs.Graph`) permits self-loops and parallel edges,
because contraction creates both.
"""

from __future__ import annotations

import math
from itertools import product

from .errors import (
    BridgeOrLoopError,
    NoSuchEdgeError,
    OutOfRangeError,
    SelfLoopError,
    TooLargeError,
)

__all__ = [
    "UniPoly",
    "BivariatePolynomial",
    "Multigraph",
    "multigraph_from_graph",
    "delete_edge",
    "contract_edge",
    "tutte_polynomial",
    "tutte_evaluations",
    "chromatic_polynomial",
    "chromatic_from_zero_T_limit",
    "PottsPartition",
    "potts_partition",
    "enumerate_states",
    "state_probability",
]

#: deletion-contraction is exponential; refuse beyond this many edges
MAX_TUTTE_EDGES = 24

#: state enumeration refuses beyond this many configurations
MAX_STATES = 10_000_000


def _fmt_terms(monomials):
    """Join (sortkey, text, coeff) monomials into a canonical string."""
    if not monomials:
        return "0"
    parts = []
    for _, text, coeff in sorted(monomials):
        if coeff < 0:
            parts.append("- " if not parts else " - ")
            coeff = -coeff
        elif parts:
            parts.append(" + ")
        if text and coeff == 1:
            parts.append(text)
        elif text:
            parts.append(f"{coeff}*{text}")
        else:
            parts.append(str(coeff))
    return "".join(parts)


def _power_text(var, exp):
    return var if exp == 1 else f"{var}^{exp}"


class UniPoly:
    """Sparse univariate polynomial with exact (int/Fraction) coefficients."""

    __slots__ = ("coeffs", "var")

    def __init__(self, coeffs=None, var="x"):
        self.var = var
        self.coeffs = {}
        for deg, c in (coeffs or {}).items():
            if c:
                self.coeffs[int(deg)] = c

    @classmethod
    def constant(cls, c, var="x"):
        return cls({0: c}, var)

    @classmethod
    def variable(cls, var="x"):
        return cls({1: 1}, var)

    def degree(self):
        return max(self.coeffs) if self.coeffs else 0

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.coeffs)
        for deg, c in other.coeffs.items():
            out[deg] = out.get(deg, 0) + c
        return UniPoly(out, self.var)

    def __sub__(self, other):
        return self + (self._coerce(other) * -1)

    def __mul__(self, other):
        if isinstance(other, UniPoly):
            out = {}
            for d1, c1 in self.coeffs.items():
                for d2, c2 in other.coeffs.items():
                    out[d1 + d2] = out.get(d1 + d2, 0) + c1 * c2
            return UniPoly(out, self.var)
        return UniPoly({d: c * other for d, c in self.coeffs.items()}, self.var)

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise OutOfRangeError("negative power of a polynomial")
        result = UniPoly.constant(1, self.var)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def _coerce(self, other):
        if isinstance(other, UniPoly):
            return other
        return UniPoly.constant(other, self.var)

    def __eq__(self, other):
        return isinstance(other, UniPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __call__(self, x):
        """Horner evaluation; exact when coefficients and x are exact."""
        if not self.coeffs:
            return 0 * x if not isinstance(x, (int, float)) else 0
        degs = sorted(self.coeffs, reverse=True)
        acc = self.coeffs[degs[0]]
        for prev, deg in zip(degs, degs[1:]):
            acc = acc * x ** (prev - deg) + self.coeffs[deg]
        acc = acc * x ** degs[-1]
        return acc

    def __str__(self):
        mono = []
        for deg, c in self.coeffs.items():
            text = "" if deg == 0 else _power_text(self.var, deg)
            mono.append(((-deg,), text, c))
        return _fmt_terms(mono)

    def __repr__(self):
        return f"UniPoly({self})"


class BivariatePolynomial:
    """Sparse integer polynomial in two variables (named x and y).

    Canonical form keeps no zero coefficients, so ``==`` is syntactic
    equality of the term maps.  ``str`` orders terms graded
    lexicographically, highest total degree first, x before y.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {}
        for key, c in (terms or {}).items():
            if c:
                self.terms[(int(key[0]), int(key[1]))] = c

    @classmethod
    def monomial(cls, i, j, c=1):
        return cls({(i, j): c})

    def __add__(self, other):
        out = dict(self.terms)
        for key, c in other.terms.items():
            out[key] = out.get(key, 0) + c
        return BivariatePolynomial(out)

    def __mul__(self, other):
        if isinstance(other, BivariatePolynomial):
            out = {}
            for (i1, j1), c1 in self.terms.items():
                for (i2, j2), c2 in other.terms.items():
                    key = (i1 + i2, j1 + j2)
                    out[key] = out.get(key, 0) + c1 * c2
            return BivariatePolynomial(out)
        return BivariatePolynomial({k: c * other for k, c in self.terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, BivariatePolynomial) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def evaluate(self, x, y):
        """Exact for int arguments, float otherwise."""
        return sum(c * x**i * y**j for (i, j), c in self.terms.items())

    def substitute(self, x_poly, y_poly):
        """Compose with univariate polynomials for x and y."""
        var = x_poly.var
        acc = UniPoly({}, var)
        for (i, j), c in self.terms.items():
            acc = acc + (x_poly**i) * (y_poly**j) * c
        return acc

    def __str__(self):
        mono = []
        for (i, j), c in self.terms.items():
            pieces = []
            if i:
                pieces.append(_power_text("x", i))
            if j:
                pieces.append(_power_text("y", j))
            text = "*".join(pieces)
            mono.append(((-(i + j), -i), text, c))
        return _fmt_terms(mono)

    def __repr__(self):
        return f"BivariatePolynomial({self})"


# ---------------------------------------------------------------------------
# multigraphs
# ---------------------------------------------------------------------------

class Multigraph:
    """Undirected multigraph: loops and parallel edges allowed.

    Edges are stored as a sorted tuple of ``(u, v)`` pairs with ``u <= v``;
    a loop is ``(u, u)``.
    """

    __slots__ = ("n", "edges")

    def __init__(self, n, edges=()):
        if n < 0:
            raise OutOfRangeError(f"node count must be >= 0, got {n}")
        self.n = int(n)
        norm = []
        for u, v in edges:
            u, v = int(u), int(v)
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise OutOfRangeError(f"edge ({u}, {v}) outside 0..{self.n - 1}")
            norm.append((u, v) if u <= v else (v, u))
        self.edges = tuple(sorted(norm))

    @property
    def m(self):
        return len(self.edges)

    def delete(self, e):
        """Remove one copy of edge e = (u, v)."""
        key = (min(e), max(e))
        edges = list(self.edges)
        try:
            edges.remove(key)
        except ValueError:
            raise NoSuchEdgeError(f"no edge {key}") from None
        return Multigraph(self.n, edges)

    def contract(self, e):
        """Identify the endpoints of non-loop edge e and drop one copy.

        Other parallel copies of e become loops.  Node labels above the
        removed endpoint shift down by one.
        """
        u, v = min(e), max(e)
        if u == v:
            raise SelfLoopError("cannot contract a loop")
        base = self.delete((u, v))

        def relabel(w):
            if w == v:
                return u
            return w - 1 if w > v else w

        return Multigraph(self.n - 1, [(relabel(a), relabel(b)) for a, b in base.edges])

    def components(self):
        parent = list(range(self.n))

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        for u, v in self.edges:
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[ru] = rv
        groups = {}
        for w in range(self.n):
            groups.setdefault(find(w), []).append(w)
        return [sorted(c) for c in groups.values()]

    def __eq__(self, other):
        return (
            isinstance(other, Multigraph)
            and self.n == other.n
            and self.edges == other.edges
        )

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"Multigraph(n={self.n}, m={self.m})"


def multigraph_from_graph(g):
    """Flatten a :class:`~graphphys.graphs.Graph` (multiplicities expand)."""
    edges = []
    for e in g.edges:
        edges.extend([(e.u, e.v)] * e.mult)
    return Multigraph(g.n, edges)


def _as_multigraph(g):
    return g if isinstance(g, Multigraph) else multigraph_from_graph(g)


def delete_edge(g, e):
    return _as_multigraph(g).delete(e)


def contract_edge(g, e):
    return _as_multigraph(g).contract(e)


def _bridges(mg):
    """Set of bridge edges (u, v).  Parallel edges are never bridges."""
    adj = [[] for _ in range(mg.n)]
    for idx, (u, v) in enumerate(mg.edges):
        if u != v:
            adj[u].append((v, idx))
            adj[v].append((u, idx))
    seen = [False] * mg.n
    disc = [0] * mg.n
    low = [0] * mg.n
    bridges = set()
    counter = [0]
    for root in range(mg.n):
        if seen[root]:
            continue
        # iterative DFS lowlink
        stack = [(root, -1, iter(adj[root]))]
        seen[root] = True
        disc[root] = low[root] = counter[0]
        counter[0] += 1
        while stack:
            u, in_edge, it = stack[-1]
            advanced = False
            for v, idx in it:
                if idx == in_edge:
                    continue
                if not seen[v]:
                    seen[v] = True
                    disc[v] = low[v] = counter[0]
                    counter[0] += 1
                    stack.append((v, idx, iter(adj[v])))
                    advanced = True
                    break
                low[u] = min(low[u], disc[v])
            if advanced:
                continue
            stack.pop()
            if stack:
                pu = stack[-1][0]
                low[pu] = min(low[pu], low[u])
                if low[u] > disc[pu]:
                    bridges.add(mg.edges[in_edge])
    return bridges


def _canonical_key(mg):
    """Relabel by iterated degree refinement; equal keys imply isomorphism.

    Isolated nodes are dropped (they do not affect the Tutte polynomial).
    The refinement is only a heuristic for cache hits; the key itself is the
    full relabeled edge multiset, so distinct graphs never collide.
    """
    nodes = sorted({w for e in mg.edges for w in e})
    if not nodes:
        return (0, ())
    loops = {w: 0 for w in nodes}
    nbrs = {w: [] for w in nodes}
    for u, v in mg.edges:
        if u == v:
            loops[u] += 1
        else:
            nbrs[u].append(v)
            nbrs[v].append(u)
    color = {w: (len(nbrs[w]) + 2 * loops[w], loops[w]) for w in nodes}
    ncolors = len(set(color.values()))
    while True:
        sig = {w: (color[w], tuple(sorted(color[x] for x in nbrs[w]))) for w in nodes}
        palette = {s: i for i, s in enumerate(sorted(set(sig.values())))}
        color = {w: palette[sig[w]] for w in nodes}
        if len(palette) == ncolors:
            break
        ncolors = len(palette)
    order = sorted(nodes, key=lambda w: (color[w], w))
    relabel = {w: i for i, w in enumerate(order)}
    edges = tuple(sorted(tuple(sorted((relabel[u], relabel[v]))) for u, v in mg.edges))
    return (len(nodes), edges)


def tutte_polynomial(g):
    """Tutte polynomial by deletion-contraction with isomorphism caching.

    Base case: a graph whose every edge is a bridge or a loop contributes
    ``x^{bridges} * y^{loops}``.  Otherwise ``T(G) = T(G-e) + T(G/e)`` for
    any edge e that is neither.  Results are cached under a canonical
    relabeling so isomorphic minors are computed once.

    Raises
    ------
    TooLargeError
        If the graph has more than ``MAX_TUTTE_EDGES`` edges.
    """
    mg = _as_multigraph(g)
    if mg.m > MAX_TUTTE_EDGES:
        raise TooLargeError(f"{mg.m} edges exceeds the cap of {MAX_TUTTE_EDGES}")
    return _tutte(mg, {})


def _tutte(mg, cache):
    key = _canonical_key(mg)
    hit = cache.get(key)
    if hit is not None:
        return hit
    loops = sum(1 for u, v in mg.edges if u == v)
    bridges = _bridges(mg)
    pivot = None
    for e in mg.edges:
        if e[0] != e[1] and e not in bridges:
            pivot = e
            break
    if pivot is None:
        result = BivariatePolynomial.monomial(len(bridges), loops)
    else:
        result = _tutte(mg.delete(pivot), cache) + _tutte(mg.contract(pivot), cache)
    cache[key] = result
    return result


def tutte_evaluations(g):
    """Classic counting evaluations of the Tutte polynomial.

    Returns a dict with the polynomial and, for a connected graph, the
    number of spanning trees T(1,1), spanning forests T(2,1), spanning
    connected subgraphs T(1,2), and the sanity value T(2,2) = 2^m.
    """
    mg = _as_multigraph(g)
    t = tutte_polynomial(mg)
    return {
        "polynomial": t,
        "spanning_trees": t.evaluate(1, 1),
        "forests": t.evaluate(2, 1),
        "spanning_connected_subgraphs": t.evaluate(1, 2),
        "two_to_m": t.evaluate(2, 2),
    }


# ---------------------------------------------------------------------------
# chromatic polynomial
# ---------------------------------------------------------------------------

def chromatic_polynomial(g):
    """Chromatic polynomial in q, via ``q^c (-1)^{n-c} T(1-q, 0)``.

    c is the number of connected components (isolated nodes count).  A
    graph with a loop has no proper coloring and yields the zero
    polynomial.
    """
    mg = _as_multigraph(g)
    t = tutte_polynomial(mg)
    c = len(mg.components())
    q = UniPoly.variable("q")
    body = t.substitute(UniPoly({0: 1, 1: -1}, "q"), UniPoly({}, "q"))
    return (q**c) * body * ((-1) ** (mg.n - c))


def chromatic_from_zero_T_limit(g, q):
    """Number of proper q-colorings as the frozen limit of the q-state model.

    In the mismatch-penalty model the Boltzmann weight of an edge with equal
    endpoint spins vanishes as the temperature goes to zero, so the
    partition function counts exactly the proper colorings.  Algebraically
    that is the substitution v = -1, y = 0 into the coupling-expansion form,
    which this function evaluates exactly.
    """
    if q < 0:
        raise OutOfRangeError("q must be a nonnegative integer")
    mg = _as_multigraph(g)
    t = tutte_polynomial(mg)
    c = len(mg.components())
    return q**c * (-1) ** (mg.n - c) * t.evaluate(1 - q, 0)


# ---------------------------------------------------------------------------
# q-state partition functions
# ---------------------------------------------------------------------------

class PottsPartition:
    """Exact q-state partition function, symbolic in w = e^K.

    ``poly`` is an integer polynomial in w and ``shift`` an extra power of
    w (negative for the penalty convention), so the partition function is
    ``w^shift * poly(w)`` with ``w = e^K`` and ``K`` the product of inverse
    temperature and coupling.
    """

    __slots__ = ("q", "convention", "poly", "shift")

    def __init__(self, q, convention, poly, shift):
        self.q = q
        self.convention = convention
        self.poly = poly
        self.shift = shift

    def evaluate(self, K):
        """Numeric partition function at coupling K."""
        w = math.exp(K)
        return float(self.poly(w) * w**self.shift)

    def v_polynomial(self):
        """The same polynomial rewritten in v = e^K - 1 (exact)."""
        v_plus_1 = UniPoly({0: 1, 1: 1}, "v")
        acc = UniPoly({}, "v")
        for deg, c in self.poly.coeffs.items():
            acc = acc + (v_plus_1**deg) * c
        return acc

    def __str__(self):
        tail = f" * w^({self.shift})" if self.shift else ""
        return f"{self.poly}{tail}"

    def __repr__(self):
        return f"PottsPartition(q={self.q}, {self.convention}, {self})"


def potts_partition(g, q, convention="reward"):
    """q-state partition function from the Tutte polynomial, exactly.

    Conventions
    -----------
    ``reward``
        Each equal-spin edge lowers the energy by the coupling J; the
        partition function is a polynomial in w = e^{K}, K = J over
        temperature.
    ``penalty``
        Each unequal-spin edge costs J; equals the reward form times
        ``w^{-m}``.

    The identity used is ``Z = q^c v^{n-c} T((q+v)/v, 1+v)`` with
    ``v = w - 1``; expanding it in w keeps every coefficient an integer.
    """
    if convention not in ("reward", "penalty"):
        raise OutOfRangeError(f"unknown convention {convention!r}")
    if not isinstance(q, int) or q < 1:
        raise OutOfRangeError("q must be a positive integer")
    mg = _as_multigraph(g)
    t = tutte_polynomial(mg)
    c = len(mg.components())
    rank = mg.n - c
    w = "w"
    x_num = UniPoly({0: q - 1, 1: 1}, w)        # q + v = (q - 1) + w
    v_poly = UniPoly({0: -1, 1: 1}, w)          # v = w - 1
    wvar = UniPoly.variable(w)
    acc = UniPoly({}, w)
    for (i, j), coeff in t.terms.items():
        # x^i y^j -> (q+v)^i v^{rank-i} w^j ; rank >= i always holds
        acc = acc + (x_num**i) * (v_poly ** (rank - i)) * (wvar**j) * coeff
    acc = acc * q**c
    shift = -mg.m if convention == "penalty" else 0
    return PottsPartition(q, convention, acc, shift)


def _expanded_edges(g):
    if isinstance(g, Multigraph):
        return g.n, list(g.edges)
    edges = []
    for e in g.edges:
        edges.extend([(e.u, e.v)] * e.mult)
    return g.n, edges


def enumerate_states(g, q, K, convention="reward"):
    """Partition function by summing all q^n spin configurations.

    Independent of the polynomial route; meant for cross-checks.

    Raises
    ------
    TooLargeError
        If q^n exceeds ``MAX_STATES``.
    """
    n, edges = _expanded_edges(g)
    if q**n > MAX_STATES:
        raise TooLargeError(f"{q}^{n} states exceed the cap of {MAX_STATES}")
    total = 0.0
    for spins in product(range(q), repeat=n):
        equal = sum(1 for u, v in edges if spins[u] == spins[v])
        if convention == "reward":
            total += math.exp(K * equal)
        else:
            total += math.exp(-K * (len(edges) - equal))
    return total


def state_probability(g, q, K, spins, convention="reward"):
    """Boltzmann probability of one spin configuration."""
    n, edges = _expanded_edges(g)
    if len(spins) != n:
        raise OutOfRangeError(f"state length {len(spins)} != node count {n}")
    z = enumerate_states(g, q, K, convention)
    equal = sum(1 for u, v in edges if spins[u] == spins[v])
    if convention == "reward":
        weight = math.exp(K * equal)
    else:
        weight = math.exp(-K * (len(edges) - equal))
    return weight / z
