"""
Coadjoint orbits of the Borel subalgebra attached to involutions.

Matrix realisations:

* type A, rank n: sl_(n+1) with root vectors ``E_ij`` (i < j) and Cartan
  basis ``E_ii - E_(i+1,i+1)``;
* type C, rank n: sp_2n with rows/columns labelled 1..n, -n..-1 and root vectors
  ``e_(ei-ej) = E_(i,j) - E_(-j,-i)``, ``e_(ei+ej) = E_(i,-j) + E_(j,-i)``,
  ``e_(2ei) = E_(i,-i)``, Cartan basis ``E_ii - E_(-i,-i)``.

For an involution ``w`` the functional ``f_w`` is the sum of the dual vectors
of its support roots. The orbit dimension is the rank of the tangent map
``x -> f_w([ . , x])`` over the Borel subalgebra, computed exactly over Q.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .root_system import Kind, Root, RootSystem, build
from .weyl import GroupElement, label_order, support

__all__ = ["OrbitProblem", "realize", "f_of", "orbit_dim", "tangent_matrix", "exact_rank"]


@dataclass(frozen=True, eq=False)
class OrbitProblem:
    system: RootSystem
    cartan: tuple[np.ndarray, ...]
    root_vectors: tuple[np.ndarray, ...]  # aligned with system.positive_roots
    # (row, col) entry that reads off the coefficient of each root vector
    readout: tuple[tuple[int, int], ...]

    @property
    def basis_b(self) -> tuple[np.ndarray, ...]:
        return self.cartan + self.root_vectors

    @property
    def basis_n(self) -> tuple[np.ndarray, ...]:
        return self.root_vectors

    def coordinates(self, M: np.ndarray) -> np.ndarray:
        """Coordinates of a matrix in the nilradical basis (entries read off)."""
        return np.array([M[i, j] for i, j in self.readout], dtype=object)

    def project(self, M: np.ndarray) -> np.ndarray:
        """Projection of ``M`` onto the nilradical along the Cartan and negative part."""
        out = np.zeros_like(M)
        for coef, E in zip(self.coordinates(M), self.root_vectors):
            out = out + coef * E
        return out


def _unit(size, i, j):
    E = np.zeros((size, size), dtype=np.int64)
    E[i, j] = 1
    return E


def _bracket(X, Y):
    return X @ Y - Y @ X


@lru_cache(maxsize=None)
def _realize(kind: Kind, n: int) -> OrbitProblem:
    rs = build(kind, n)
    vectors, readout = [], []
    if kind is Kind.A:
        size = n + 1
        cartan = tuple(_unit(size, i, i) - _unit(size, i + 1, i + 1) for i in range(n))
        for r in rs.positive_roots:
            i = r.eps.index(1)
            j = r.eps.index(-1)
            vectors.append(_unit(size, i, j))
            readout.append((i, j))
    else:
        size = 2 * n
        pos = {lab: k for k, lab in enumerate(label_order(n, True))}
        cartan = tuple(_unit(size, pos[i], pos[i]) - _unit(size, pos[-i], pos[-i])
                       for i in range(1, n + 1))
        for r in rs.positive_roots:
            nz = [(k + 1, c) for k, c in enumerate(r.eps) if c]
            if len(nz) == 1:
                i = nz[0][0]
                E = _unit(size, pos[i], pos[-i])
                rd = (pos[i], pos[-i])
            else:
                (i, _), (j, cj) = nz
                if cj < 0:
                    E = _unit(size, pos[i], pos[j]) - _unit(size, pos[-j], pos[-i])
                    rd = (pos[i], pos[j])
                else:
                    E = _unit(size, pos[i], pos[-j]) + _unit(size, pos[j], pos[-i])
                    rd = (pos[i], pos[-j])
            vectors.append(E)
            readout.append(rd)
    problem = OrbitProblem(rs, cartan, tuple(vectors), tuple(readout))
    _check_closure(problem)
    return problem


def _check_closure(problem: OrbitProblem):
    # [b, n] must land in n, and the readout must reconstruct it exactly
    for X in problem.basis_b:
        for Y in problem.basis_n:
            Z = _bracket(Y, X)
            if not np.array_equal(problem.project(Z).astype(np.int64), Z):
                raise AssertionError("bracket [n, b] left the span of the root vectors")


def realize(kind, n: int) -> OrbitProblem:
    """Matrix model of b and n for type A (sl_(n+1)) or type C (sp_2n) of rank n."""
    kind = Kind(kind)
    if kind is Kind.B:
        raise ValueError("coadjoint orbits are realised for types A and C only")
    build(kind, n)  # rank validation
    return _realize(kind, n)


def _problem_for(sigma: GroupElement) -> OrbitProblem:
    return realize(sigma.kind, sigma.rank)


def f_of(sigma: GroupElement) -> np.ndarray:
    """Coefficient vector of f_sigma over the dual root-vector basis."""
    rs = sigma.system
    supp = set(support(sigma))
    return np.array([1 if r in supp else 0 for r in rs.positive_roots], dtype=np.int64)


def tangent_matrix(sigma: GroupElement, sign: int = 1, projected: bool = False) -> np.ndarray:
    """
    ``M[k][m] = f([y_m, x_k])`` for x_k in the basis of b and y_m in the basis
    of n. ``sign=-1`` uses ``[x_k, y_m]`` instead; ``projected`` evaluates f on
    the projection of the bracket to n rather than reading entries directly.
    """
    problem = _problem_for(sigma)
    f = f_of(sigma)
    rows = []
    for X in problem.basis_b:
        row = []
        for Y in problem.basis_n:
            Z = _bracket(Y, X) if sign > 0 else _bracket(X, Y)
            if projected:
                Z = problem.project(Z)
            row.append(int(np.dot(f, problem.coordinates(Z))))
        rows.append(row)
    return np.array(rows, dtype=np.int64)


def exact_rank(M) -> int:
    """Rank over Q by fraction-exact Gaussian elimination."""
    rows = [[Fraction(int(x)) for x in row] for row in np.asarray(M)]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(rows)) if rows[r][col] != 0), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        p = rows[rank]
        for r in range(len(rows)):
            if r != rank and rows[r][col] != 0:
                k = rows[r][col] / p[col]
                rows[r] = [a - k * b for a, b in zip(rows[r], p)]
        rank += 1
    return rank


def orbit_dim(sigma: GroupElement) -> int:
    """Dimension of the Borel orbit of f_sigma."""
    return exact_rank(tangent_matrix(sigma))
