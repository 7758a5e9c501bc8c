"""Symmetric eigendecompositions and matrix functions built on them.

Everything spectral in the package funnels through :func:`eig_symmetric`,
which wraps ``numpy.linalg.eigh`` and fixes the conventions once: eigenvalues
sorted descending, orthonormal eigenvectors as columns, and degeneracies
grouped under a relative tolerance.  Matrix functions (exponentials,
hyperbolics, resolvents) are evaluated through the eigenbasis, except the
resolvent, which is a linear solve.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DisconnectedError, NotSymmetricError, SingularResolventError
from .graphs import adjacency_matrix, laplacian_matrix

__all__ = [
    "Spectrum",
    "eig_symmetric",
    "adjacency_spectrum",
    "laplacian_spectrum",
    "matrix_function",
    "matrix_exponential",
    "matrix_sinh",
    "matrix_cosh",
    "resolvent",
    "laplacian_pseudoinverse",
]

#: relative scale for symmetry checks
SYMMETRY_RTOL = 1e-12
#: relative scale for grouping near-equal eigenvalues
DEGENERACY_RTOL = 1e-8


@dataclass(frozen=True)
class Spectrum:
    """Eigendecomposition of a real symmetric matrix.

    Attributes
    ----------
    values : ndarray
        Eigenvalues sorted descending, one entry per dimension.
    vectors : ndarray
        Orthonormal eigenvectors; column j belongs to ``values[j]``.
    distinct : tuple
        ``(value, multiplicity)`` pairs after grouping eigenvalues that sit
        within ``tol`` of each other; the value reported is the group mean.
    tol : float
        Absolute grouping tolerance that was used.
    """

    values: np.ndarray
    vectors: np.ndarray
    distinct: tuple
    tol: float

    @property
    def n(self):
        return len(self.values)

    def apply(self, f):
        """The matrix ``V f(Lambda) V^T`` for a scalar function ``f``."""
        fvals = np.asarray([f(v) for v in self.values], dtype=float)
        return (self.vectors * fvals) @ self.vectors.T

    def reconstruct(self):
        return self.apply(lambda x: x)


def eig_symmetric(matrix, rtol=SYMMETRY_RTOL):
    """Eigendecomposition of a symmetric matrix with fixed conventions.

    Parameters
    ----------
    matrix : ndarray
        Real square matrix; must satisfy
        ``max|A - A^T| <= rtol * max(1, max|A|)``.

    Raises
    ------
    NotSymmetricError
        If the symmetry check fails.
    """
    a = np.asarray(matrix, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise NotSymmetricError(f"expected a square matrix, got shape {a.shape}")
    scale = max(1.0, float(np.max(np.abs(a))) if a.size else 0.0)
    asym = float(np.max(np.abs(a - a.T))) if a.size else 0.0
    if asym > rtol * scale:
        raise NotSymmetricError(f"matrix asymmetry {asym:g} exceeds {rtol * scale:g}")
    vals, vecs = np.linalg.eigh((a + a.T) / 2.0)
    order = np.argsort(vals)[::-1]          # descending, stable enough for ties
    vals = vals[order]
    vecs = vecs[:, order]
    norm = float(np.max(np.abs(vals))) if len(vals) else 0.0
    tol = DEGENERACY_RTOL * max(1.0, norm)
    distinct = []
    i = 0
    while i < len(vals):
        j = i
        while j + 1 < len(vals) and vals[i] - vals[j + 1] <= tol:
            j += 1
        group = vals[i : j + 1]
        distinct.append((float(group.mean()), j - i + 1))
        i = j + 1
    return Spectrum(values=vals, vectors=vecs, distinct=tuple(distinct), tol=tol)


def adjacency_spectrum(g):
    """Spectrum of the (weighted) adjacency matrix of an undirected graph."""
    return eig_symmetric(adjacency_matrix(g))


def laplacian_spectrum(g):
    """Spectrum of the combinatorial Laplacian (descending, like all spectra here)."""
    return eig_symmetric(laplacian_matrix(g))


def matrix_function(matrix, f):
    """Evaluate a scalar function of a symmetric matrix through its eigenbasis."""
    spec = matrix if isinstance(matrix, Spectrum) else eig_symmetric(matrix)
    return spec.apply(f)


def matrix_exponential(matrix, beta=1.0):
    """``exp(beta * A)`` for symmetric A."""
    return matrix_function(matrix, lambda x: np.exp(beta * x))


def matrix_sinh(matrix):
    return matrix_function(matrix, np.sinh)


def matrix_cosh(matrix):
    return matrix_function(matrix, np.cosh)


def resolvent(matrix, eta):
    """``(I - A/eta)^{-1}`` by linear solve (not eigenexpansion).

    Raises
    ------
    SingularResolventError
        If ``eta`` is zero or lies within the degeneracy tolerance of an
        eigenvalue of A.
    """
    spec = matrix if isinstance(matrix, Spectrum) else eig_symmetric(matrix)
    if eta == 0 or np.min(np.abs(spec.values - eta)) <= spec.tol:
        raise SingularResolventError(f"eta={eta} is (close to) an eigenvalue")
    n = spec.n
    a = spec.reconstruct() if isinstance(matrix, Spectrum) else np.asarray(matrix, float)
    return np.linalg.solve(np.eye(n) - a / eta, np.eye(n))


def laplacian_pseudoinverse(laplacian):
    """Moore-Penrose pseudoinverse of a connected graph's Laplacian.

    Computed as the spectral sum over nonzero modes,
    ``sum_k u_k u_k^T / mu_k``.  The zero mode must be simple.

    Raises
    ------
    DisconnectedError
        If the zero eigenvalue has multiplicity != 1 (more than one
        component, or not a Laplacian at all).
    """
    spec = laplacian if isinstance(laplacian, Spectrum) else eig_symmetric(laplacian)
    near_zero = int(np.sum(np.abs(spec.values) <= spec.tol))
    if near_zero != 1:
        raise DisconnectedError(
            f"expected a simple zero eigenvalue, found {near_zero} near-zero modes"
        )
    return spec.apply(lambda x: 0.0 if abs(x) <= spec.tol else 1.0 / x)
