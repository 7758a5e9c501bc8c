"""Topological polynomials of Feynman diagrams.

A diagram is a connected multigraph with parameter variables x1..xm on its
internal edges, optional external legs carrying momenta p1..pt, and optional
internal masses.  Three independent routes to the same polynomials are
implemented:

* direct enumeration of spanning trees and spanning 2-forests,
* determinants of the edge-weighted Laplacian (Kirchhoff polynomial) with a
  complement-inversion step,
* the determinant of the Laplacian modified by source variables z on the
  leg nodes, expanded by z-degree.

Momentum conservation is imposed by eliminating the last leg momentum, so
results live in the invariant products ``s_jk = p_j . p_k / mu^2`` with
``j <= k < t``.  All arithmetic is exact (integers, or Fractions once
masses enter).
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from itertools import combinations

from .errors import (
    BridgeOrLoopError,
    DisconnectedError,
    NoExternalLegsError,
    NoSuchEdgeError,
    OutOfRangeError,
    TooLargeError,
)

__all__ = [
    "MPoly",
    "FeynmanGraph",
    "spanning_trees",
    "spanning_two_forests",
    "first_symanzik",
    "second_symanzik",
    "kirchhoff_polynomial",
    "first_symanzik_from_kirchhoff",
    "modified_laplacian_expansion",
    "symanzik_from_modified_laplacian",
    "delete_internal_edge",
    "contract_internal_edge",
    "momentum_dot",
]

#: cap on edge subsets inspected by the enumeration routes
MAX_SUBSETS = 6_000_000

_VAR_RE = re.compile(r"([a-zA-Z]+)(\d*)\Z")
_CLASS_RANK = {"x": 0, "z": 1, "s": 2}


def _vkey(name):
    """Sort key: x-variables, then z, then s, numerically within a class."""
    m = _VAR_RE.match(name)
    if not m:
        return (9, 0, 0, name)
    prefix, digits = m.group(1), m.group(2)
    rank = _CLASS_RANK.get(prefix, 9)
    if prefix == "s" and len(digits) == 2:
        return (rank, int(digits[0]), int(digits[1]), prefix)
    return (rank, int(digits) if digits else 0, 0, prefix)


class MPoly:
    """Sparse multivariate polynomial with exact coefficients.

    Terms map a canonical monomial key -- a tuple of ``(variable, exponent)``
    pairs sorted by variable -- to an int or Fraction coefficient.  Zero
    coefficients are never stored, so ``==`` is syntactic equality.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {}
        for key, c in (terms or {}).items():
            if c:
                self.terms[key] = c

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def constant(cls, c):
        return cls({(): c}) if c else cls()

    @classmethod
    def variable(cls, name, exp=1):
        return cls({((name, exp),): 1}) if exp else cls.constant(1)

    @classmethod
    def monomial(cls, exps, c=1):
        """From a {variable: exponent} mapping."""
        key = tuple(sorted(((v, e) for v, e in exps.items() if e), key=lambda p: _vkey(p[0])))
        return cls({key: c})

    # -- ring operations ---------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, MPoly):
            return other
        return MPoly.constant(other)

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for key, c in other.terms.items():
            out[key] = out.get(key, 0) + c
        return MPoly(out)

    __radd__ = __add__

    def __sub__(self, other):
        return self + self._coerce(other) * -1

    def __mul__(self, other):
        if not isinstance(other, MPoly):
            return MPoly({k: c * other for k, c in self.terms.items()})
        out = {}
        for k1, c1 in self.terms.items():
            d1 = dict(k1)
            for k2, c2 in other.terms.items():
                merged = dict(d1)
                for v, e in k2:
                    merged[v] = merged.get(v, 0) + e
                key = tuple(sorted(merged.items(), key=lambda p: _vkey(p[0])))
                out[key] = out.get(key, 0) + c1 * c2
        return MPoly(out)

    __rmul__ = __mul__

    def __neg__(self):
        return self * -1

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MPoly.constant(other)
        return isinstance(other, MPoly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    # -- structure ---------------------------------------------------------

    def variables(self):
        return sorted({v for key in self.terms for v, _ in key}, key=_vkey)

    def total_degree(self):
        return max((sum(e for _, e in key) for key in self.terms), default=0)

    def is_homogeneous(self):
        degs = {sum(e for _, e in key) for key in self.terms}
        return len(degs) <= 1

    def coefficient_of(self, exps):
        """Polynomial coefficient of the given {var: exp} monomial, i.e. the
        sum of terms matching those exponents exactly, with them divided out.
        Variables not named are left free, but named variables must match
        exactly (including exponent zero)."""
        want = {v: e for v, e in exps.items()}
        out = {}
        for key, c in self.terms.items():
            d = dict(key)
            if all(d.get(v, 0) == e for v, e in want.items()):
                rest = tuple(
                    sorted(
                        ((v, e) for v, e in d.items() if v not in want),
                        key=lambda p: _vkey(p[0]),
                    )
                )
                out[rest] = out.get(rest, 0) + c
        return MPoly(out)

    def grade_by(self, prefix):
        """Split into homogeneous parts by total degree in variables with
        the given name prefix; returns {degree: MPoly}."""
        parts = {}
        for key, c in self.terms.items():
            deg = sum(e for v, e in key if v.startswith(prefix))
            parts.setdefault(deg, {})[key] = c
        return {deg: MPoly(t) for deg, t in sorted(parts.items())}

    def evaluate(self, assignment):
        """Numeric value with every variable bound in ``assignment``."""
        total = 0
        for key, c in self.terms.items():
            val = c
            for v, e in key:
                val *= assignment[v] ** e
            total += val
        return total

    # -- exact division (for fraction-free elimination) --------------------

    def _leading(self, order):
        """Largest term under graded lex with the given variable precedence
        (a true monomial order, so leading terms are multiplicative)."""
        best_key = None
        best_rank = None
        for key in self.terms:
            vec = [0] * len(order)
            tot = 0
            for v, e in key:
                vec[order[v]] = e
                tot += e
            rank = (tot, tuple(vec))
            if best_rank is None or rank > best_rank:
                best_rank, best_key = rank, key
        return best_key, self.terms[best_key]

    def exact_divide(self, divisor):
        """Exact polynomial division; raises ArithmeticError on remainder."""
        if not divisor.terms:
            raise ZeroDivisionError("division by the zero polynomial")
        order = {
            v: i
            for i, v in enumerate(
                sorted(set(self.variables()) | set(divisor.variables()), key=_vkey)
            )
        }
        quotient = MPoly.zero()
        rem = self
        dkey, dcoeff = divisor._leading(order)
        dexp = dict(dkey)
        while rem.terms:
            rkey, rcoeff = rem._leading(order)
            rexp = dict(rkey)
            qexp = {}
            for v, e in dexp.items():
                if rexp.get(v, 0) < e:
                    raise ArithmeticError("division is not exact (monomials)")
            for v, e in rexp.items():
                left = e - dexp.get(v, 0)
                if left < 0:
                    raise ArithmeticError("division is not exact (monomials)")
                if left:
                    qexp[v] = left
            if isinstance(rcoeff, int) and isinstance(dcoeff, int):
                if rcoeff % dcoeff:
                    raise ArithmeticError("division is not exact (coefficients)")
                qc = rcoeff // dcoeff
            else:
                qc = Fraction(rcoeff) / Fraction(dcoeff)
            mono = MPoly.monomial(qexp, qc)
            quotient = quotient + mono
            rem = rem - mono * divisor
        return quotient

    # -- printing ----------------------------------------------------------

    def __str__(self):
        if not self.terms:
            return "0"
        allvars = self.variables()
        index = {v: i for i, v in enumerate(allvars)}
        rows = []
        for key, c in self.terms.items():
            vec = [0] * len(allvars)
            for v, e in key:
                vec[index[v]] = e
            text = "*".join(
                v if e == 1 else f"{v}^{e}" for v, e in key
            )
            rows.append(((-sum(vec), tuple(-e for e in vec)), text, c))
        parts = []
        for _, text, c in sorted(rows):
            if c < 0:
                parts.append("- " if not parts else " - ")
                c = -c
            elif parts:
                parts.append(" + ")
            if text and c == 1:
                parts.append(text)
            elif text:
                parts.append(f"{c}*{text}")
            else:
                parts.append(str(c))
        return "".join(parts)

    def __repr__(self):
        return f"MPoly({self})"


def _det_bareiss(rows):
    """Fraction-free determinant of a square matrix of MPoly entries."""
    n = len(rows)
    if n == 0:
        return MPoly.constant(1)
    m = [[rows[i][j] for j in range(n)] for i in range(n)]
    sign = 1
    prev = MPoly.constant(1)
    for k in range(n - 1):
        if not m[k][k].terms:
            for r in range(k + 1, n):
                if m[r][k].terms:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return MPoly.zero()
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = m[i][j] * m[k][k] - m[i][k] * m[k][j]
                m[i][j] = num.exact_divide(prev)
            m[i][k] = MPoly.zero()
        prev = m[k][k]
    return m[n - 1][n - 1] * sign


# ---------------------------------------------------------------------------
# diagrams
# ---------------------------------------------------------------------------

class FeynmanGraph:
    """Connected multigraph with edge variables, legs, and masses.

    Parameters
    ----------
    n : int
        Number of internal nodes.
    edges : iterable of (u, v)
        Internal lines; parallel edges and (after contraction) loops are
        allowed.  Edge j (0-based position) carries the variable
        ``x{j+1}`` unless ``xindex`` overrides it.
    legs : iterable of int or (node, label)
        Attachment nodes of the external lines; leg i carries momentum
        ``p{i+1}``.  At most 9 legs (variable naming).
    masses : iterable, optional
        One mass per internal edge, in units of the reference scale; exact
        values (int / Fraction / decimal string) recommended.  Default all
        zero.
    """

    __slots__ = ("n", "edges", "legs", "labels", "masses", "xindex")

    def __init__(self, n, edges, legs=(), masses=None, xindex=None):
        self.n = int(n)
        es = []
        for u, v in edges:
            u, v = int(u), int(v)
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise OutOfRangeError(f"edge ({u}, {v}) outside 0..{self.n - 1}")
            es.append((u, v) if u <= v else (v, u))
        self.edges = tuple(es)
        nodes = []
        labels = []
        for item in legs:
            if isinstance(item, (tuple, list)):
                node, label = item
            else:
                node, label = item, None
            node = int(node)
            if not 0 <= node < self.n:
                raise OutOfRangeError(f"leg node {node} outside 0..{self.n - 1}")
            nodes.append(node)
            labels.append(label if label is not None else f"p{len(nodes)}")
        if len(nodes) > 9:
            raise TooLargeError("at most 9 external legs are supported")
        self.legs = tuple(nodes)
        self.labels = tuple(labels)
        if masses is None:
            self.masses = tuple(Fraction(0) for _ in self.edges)
        else:
            ms = [Fraction(str(v)) if not isinstance(v, Fraction) else v for v in masses]
            if len(ms) != len(self.edges):
                raise OutOfRangeError("need one mass per internal edge")
            self.masses = tuple(ms)
        if xindex is None:
            self.xindex = tuple(range(1, len(self.edges) + 1))
        else:
            self.xindex = tuple(int(i) for i in xindex)
            if len(self.xindex) != len(self.edges):
                raise OutOfRangeError("xindex must match the edge list")

    @property
    def m(self):
        return len(self.edges)

    @property
    def t(self):
        return len(self.legs)

    def loop_count(self):
        """First Betti number m - n + c."""
        return self.m - self.n + len(_components(self.n, self.edges))

    def xvar(self, j):
        """Variable name of edge j (0-based position)."""
        return f"x{self.xindex[j]}"

    def __repr__(self):
        return f"FeynmanGraph(n={self.n}, m={self.m}, legs={self.t})"


def _components(n, edges):
    parent = list(range(n))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for u, v in edges:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
    groups = {}
    for w in range(n):
        groups.setdefault(find(w), []).append(w)
    return list(groups.values())


def _require_connected(fg):
    if len(_components(fg.n, fg.edges)) != 1:
        raise DisconnectedError("the diagram must be connected")


def _math_comb(a, b):
    return math.comb(a, b) if 0 <= b <= a else 0


def spanning_trees(fg):
    """All spanning trees as tuples of 0-based edge positions.

    Enumerates edge subsets of size n-1 with a union-find acyclicity check;
    refuses when the number of subsets exceeds ``MAX_SUBSETS``.
    """
    _require_connected(fg)
    want = fg.n - 1
    if _math_comb(fg.m, want) > MAX_SUBSETS:
        raise TooLargeError("too many edge subsets to enumerate")
    out = []
    for subset in combinations(range(fg.m), want):
        parent = list(range(fg.n))

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        ok = True
        for j in subset:
            u, v = fg.edges[j]
            ru, rv = find(u), find(v)
            if ru == rv:
                ok = False
                break
            parent[ru] = rv
        if ok:
            out.append(subset)
    return out


def spanning_two_forests(fg):
    """All spanning 2-forests as (edge positions, (part, part)).

    A spanning 2-forest has n-2 edges, no cycle, and exactly two trees; the
    parts are returned as sorted node tuples, smaller-first.
    """
    _require_connected(fg)
    if fg.n < 2:
        raise OutOfRangeError("a 2-forest needs at least 2 nodes")
    want = fg.n - 2
    if _math_comb(fg.m, want) > MAX_SUBSETS:
        raise TooLargeError("too many edge subsets to enumerate")
    out = []
    for subset in combinations(range(fg.m), want):
        parent = list(range(fg.n))

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        ok = True
        for j in subset:
            u, v = fg.edges[j]
            ru, rv = find(u), find(v)
            if ru == rv:
                ok = False
                break
            parent[ru] = rv
        if not ok:
            continue
        groups = {}
        for w in range(fg.n):
            groups.setdefault(find(w), []).append(w)
        if len(groups) == 2:
            a, b = [tuple(sorted(grp)) for grp in groups.values()]
            out.append((subset, tuple(sorted((a, b)))))
    return out


def first_symanzik(fg):
    """First topological polynomial: sum over spanning trees of the product
    of the variables NOT on the tree.  Homogeneous of degree equal to the
    loop count."""
    total = MPoly.zero()
    for tree in spanning_trees(fg):
        chosen = set(tree)
        total = total + MPoly.monomial(
            {fg.xvar(j): 1 for j in range(fg.m) if j not in chosen}
        )
    return total


def momentum_dot(fg, a, b):
    """``p_a . p_b`` (1-based legs) in the s-variables, with the last leg
    eliminated by momentum conservation."""
    t = fg.t
    if t == 0:
        raise NoExternalLegsError("no external legs")
    if not (1 <= a <= t and 1 <= b <= t):
        raise OutOfRangeError(f"leg index out of range 1..{t}")
    if t == 1:
        return MPoly.zero()     # the single momentum must vanish

    def vec(leg):
        if leg < t:
            return {leg: 1}
        return {c: -1 for c in range(1, t)}

    va, vb = vec(a), vec(b)
    out = MPoly.zero()
    for i, ci in va.items():
        for j, cj in vb.items():
            lo, hi = min(i, j), max(i, j)
            out = out + MPoly.variable(f"s{lo}{hi}") * (ci * cj)
    return out


def _cut_factor(fg, parts):
    """Sum of p_a . p_b over legs a, b on opposite sides of the 2-forest."""
    side = {}
    for w in parts[0]:
        side[w] = 0
    for w in parts[1]:
        side[w] = 1
    total = MPoly.zero()
    for a in range(1, fg.t + 1):
        for b in range(1, fg.t + 1):
            if side[fg.legs[a - 1]] == 0 and side[fg.legs[b - 1]] == 1:
                total = total + momentum_dot(fg, a, b)
    return total


def second_symanzik(fg, include_masses=True):
    """Second topological polynomial.

    The massless part sums, over spanning 2-forests, the product of the cut
    variables times the total squared momentum flowing between the two
    trees (in s-variables).  With masses included the full polynomial is
    ``F0 + U * sum_j x_j mass_j^2``.

    Raises
    ------
    NoExternalLegsError
        If the diagram has no external legs at all.
    """
    if fg.t == 0:
        raise NoExternalLegsError("momentum-dependent polynomial needs legs")
    total = MPoly.zero()
    for subset, parts in spanning_two_forests(fg):
        factor = _cut_factor(fg, parts)
        if not factor:
            continue
        chosen = set(subset)
        mono = MPoly.monomial({fg.xvar(j): 1 for j in range(fg.m) if j not in chosen})
        total = total + mono * factor
    if include_masses:
        u = first_symanzik(fg)
        mass_term = MPoly.zero()
        for j in range(fg.m):
            if fg.masses[j]:
                mass_term = mass_term + MPoly.variable(fg.xvar(j)) * (fg.masses[j] ** 2)
        total = total + u * mass_term
    return total


# ---------------------------------------------------------------------------
# determinant routes
# ---------------------------------------------------------------------------

def _weighted_laplacian(fg):
    """n x n matrix of MPoly: degree of x-weights on the diagonal, minus
    adjacency; loops drop out."""
    rows = [[MPoly.zero() for _ in range(fg.n)] for _ in range(fg.n)]
    for j, (u, v) in enumerate(fg.edges):
        if u == v:
            continue
        x = MPoly.variable(fg.xvar(j))
        rows[u][u] = rows[u][u] + x
        rows[v][v] = rows[v][v] + x
        rows[u][v] = rows[u][v] - x
        rows[v][u] = rows[v][u] - x
    return rows


def kirchhoff_polynomial(fg, ground=0):
    """Sum over spanning trees of the product of tree-edge variables,
    computed as the Laplacian minor determinant with the ``ground`` row and
    column deleted (any choice gives the same polynomial)."""
    _require_connected(fg)
    if not 0 <= ground < fg.n:
        raise OutOfRangeError(f"ground node {ground} outside 0..{fg.n - 1}")
    lap = _weighted_laplacian(fg)
    keep = [i for i in range(fg.n) if i != ground]
    minor = [[lap[i][j] for j in keep] for i in keep]
    return _det_bareiss(minor)


def _invert_multilinear(poly, all_x):
    """Map each multilinear monomial to its complement in ``all_x``.

    Implements the x -> 1/x substitution followed by multiplication with
    the product of every x variable; requires the input to use only those
    variables, each with exponent <= 1, but tolerates extra non-x factors
    (z-variables are passed through untouched).
    """
    xset = set(all_x)
    out = {}
    for key, c in poly.terms.items():
        exps = {}
        for v, e in key:
            if v in xset:
                if e > 1:
                    raise OutOfRangeError("polynomial is not multilinear in x")
                exps[v] = e
            else:
                exps[v] = e
        comp = {v: e for v, e in exps.items() if v not in xset}
        present = {v for v in exps if v in xset and exps[v] == 1}
        for v in all_x:
            if v not in present:
                comp[v] = comp.get(v, 0) + 1
        key2 = tuple(sorted(comp.items(), key=lambda p: _vkey(p[0])))
        out[key2] = out.get(key2, 0) + c
    return MPoly(out)


def first_symanzik_from_kirchhoff(fg, kpoly=None):
    """First polynomial via complement inversion of the Kirchhoff polynomial."""
    if kpoly is None:
        kpoly = kirchhoff_polynomial(fg)
    all_x = [fg.xvar(j) for j in range(fg.m)]
    return _invert_multilinear(kpoly, all_x)


def modified_laplacian_expansion(fg):
    """Determinant of the Laplacian with leg variables added on the diagonal,
    split by total degree in the z-variables.

    Leg i contributes ``z{i}`` to the diagonal entry of its attachment
    node.  Returns ``{degree: polynomial}``; the degree-0 part is absent
    (the plain Laplacian is singular) and degree 1 carries the Kirchhoff
    polynomial once per leg variable.
    """
    if fg.t == 0:
        raise NoExternalLegsError("the modified Laplacian needs legs")
    rows = _weighted_laplacian(fg)
    for i, node in enumerate(fg.legs, start=1):
        rows[node][node] = rows[node][node] + MPoly.variable(f"z{i}")
    det = _det_bareiss(rows)
    return det.grade_by("z")


def symanzik_from_modified_laplacian(fg):
    """Recover (U, F0) from the modified-Laplacian determinant expansion."""
    parts = modified_laplacian_expansion(fg)
    all_x = [fg.xvar(j) for j in range(fg.m)]
    w1 = parts.get(1, MPoly.zero())
    k1 = w1.coefficient_of({"z1": 1})
    u = _invert_multilinear(k1, all_x)
    f0 = MPoly.zero()
    w2 = parts.get(2, MPoly.zero())
    for a in range(1, fg.t + 1):
        for b in range(a + 1, fg.t + 1):
            coeff = w2.coefficient_of({f"z{a}": 1, f"z{b}": 1})
            if not coeff:
                continue
            f0 = f0 + momentum_dot(fg, a, b) * _invert_multilinear(coeff, all_x)
    return u, f0


# ---------------------------------------------------------------------------
# deletion and contraction
# ---------------------------------------------------------------------------

def _check_regular(fg, j):
    _require_connected(fg)
    if not 0 <= j < fg.m:
        raise NoSuchEdgeError(f"no internal edge at position {j}")
    u, v = fg.edges[j]
    if u == v:
        raise BridgeOrLoopError("edge is a self-loop")
    rest = [e for i, e in enumerate(fg.edges) if i != j]
    if len(_components(fg.n, rest)) != 1:
        raise BridgeOrLoopError("edge is a bridge")


def delete_internal_edge(fg, j):
    """Diagram with internal edge j removed; remaining edges keep their
    variables.  The edge must be neither a bridge nor a loop."""
    _check_regular(fg, j)
    keep = [i for i in range(fg.m) if i != j]
    return FeynmanGraph(
        fg.n,
        [fg.edges[i] for i in keep],
        legs=list(zip(fg.legs, fg.labels)),
        masses=[fg.masses[i] for i in keep],
        xindex=[fg.xindex[i] for i in keep],
    )


def contract_internal_edge(fg, j):
    """Diagram with internal edge j contracted; endpoints merge, legs and
    parallel edges follow, remaining edges keep their variables."""
    _check_regular(fg, j)
    u, v = fg.edges[j]

    def relabel(w):
        if w == v:
            return u
        return w - 1 if w > v else w

    keep = [i for i in range(fg.m) if i != j]
    new_edges = [(relabel(fg.edges[i][0]), relabel(fg.edges[i][1])) for i in keep]
    return FeynmanGraph(
        fg.n - 1,
        new_edges,
        legs=[(relabel(node), lab) for node, lab in zip(fg.legs, fg.labels)],
        masses=[fg.masses[i] for i in keep],
        xindex=[fg.xindex[i] for i in keep],
    )
