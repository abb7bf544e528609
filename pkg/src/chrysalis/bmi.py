"""Symmetric-matrix machinery: Jacobi eigensolver, PSD checks, the bilinear
matrix inequality and its lifted linear relaxation, operator norms,
projections, and the exact +/-1 bilinear maximization playground."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from . import kernels
from .errors import (AsymmetricForm, ConvergenceFailure, DimensionMismatch,
                     InfeasiblePoint, NotSymmetric, RankDeficient, TooLarge)

_MAX_SWEEPS = 100
PSD_TOL = 1e-9


def _require_symmetric(m: np.ndarray) -> np.ndarray:
    m = np.asarray(m, dtype=float)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise NotSymmetric("matrix must be square")
    if not np.array_equal(m, m.T):
        raise NotSymmetric("matrix must be symmetric")
    return m


def jacobi_eigen(m: np.ndarray, tol: float = 1e-12) -> tuple[np.ndarray, np.ndarray]:
    """Cyclic-by-rows Jacobi rotations until the off-diagonal Frobenius mass
    drops below tol.

    Returns (ascending eigenvalues, orthogonal V with matching columns);
    V diag(w) V^T reconstructs the input to about 10*tol.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    a = _require_symmetric(m).copy()
    n = a.shape[0]
    v = np.eye(n)
    for _ in range(_MAX_SWEEPS):
        off = math.sqrt(max(0.0, np.sum(a * a) - np.sum(np.diag(a) ** 2)))
        if off < tol:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                if a[p, q] == 0.0:
                    continue
                phi = 0.5 * math.atan2(2.0 * a[p, q], a[q, q] - a[p, p])
                c, s = math.cos(phi), math.sin(phi)
                rot = np.eye(n)
                rot[p, p] = c
                rot[q, q] = c
                rot[p, q] = s
                rot[q, p] = -s
                a = rot.T @ a @ rot
                a[p, q] = a[q, p] = 0.0
                v = v @ rot
    else:
        raise ConvergenceFailure(f"no convergence in {_MAX_SWEEPS} sweeps")
    order = np.argsort(np.diag(a))
    return np.diag(a)[order], v[:, order]


def psd_check(m: np.ndarray, tol: float = PSD_TOL) -> bool:
    """True when the smallest eigenvalue is at least -tol."""
    w, _ = jacobi_eigen(m)
    return bool(w[0] >= -tol)


@dataclass(frozen=True)
class BmiProblem:
    """minimize c.x  s.t.  F0 + sum_i x_i F_i + sum_jk x_j x_k G_jk >= 0."""

    c: np.ndarray
    f0: np.ndarray
    f: list  # m symmetric matrices
    g: list  # m x m grid of symmetric matrices, g[j][k] == g[k][j]

    def __post_init__(self):
        m = len(self.c)
        dim = self.f0.shape[0]
        if len(self.f) != m or len(self.g) != m:
            raise DimensionMismatch("need m coefficient matrices")
        for row in self.g:
            if len(row) != m:
                raise DimensionMismatch("G grid must be m x m")
        mats = [self.f0, *self.f, *(mat for row in self.g for mat in row)]
        for mat in mats:
            if mat.shape != (dim, dim):
                raise DimensionMismatch("all matrices must share one dimension")
        for j in range(m):
            for k in range(m):
                if not np.array_equal(self.g[j][k], self.g[k][j]):
                    raise DimensionMismatch("G grid must be index-symmetric")


def bmi_eval(p: BmiProblem, x: np.ndarray) -> tuple[float, np.ndarray, bool]:
    """Objective, assembled constraint matrix, and its PSD feasibility."""
    x = np.asarray(x, dtype=float)
    if x.shape != (len(p.c),):
        raise DimensionMismatch("x must have length m")
    constraint = p.f0.astype(float).copy()
    for i, xi in enumerate(x):
        constraint = constraint + xi * p.f[i]
    for j in range(len(x)):
        for k in range(len(x)):
            constraint = constraint + x[j] * x[k] * p.g[j][k]
    return float(np.dot(p.c, x)), constraint, psd_check(constraint, PSD_TOL)


def lmi_lift(x: np.ndarray, w: np.ndarray) -> tuple[np.ndarray, bool]:
    """Relaxation block [[W, x], [x^T, 1]]; PSD iff W - x x^T is PSD."""
    x = np.asarray(x, dtype=float)
    w = _require_symmetric(w)
    if w.shape[0] != x.shape[0]:
        raise DimensionMismatch("W must be m x m for x of length m")
    m = x.shape[0]
    block = np.empty((m + 1, m + 1))
    block[:m, :m] = w
    block[:m, m] = x
    block[m, :m] = x
    block[m, m] = 1.0
    return block, psd_check(block, PSD_TOL)


def operator_norm(m: np.ndarray) -> float:
    """Spectral norm sqrt(lambda_max(M^T M))."""
    m = np.asarray(m, dtype=float)
    gram = m.T @ m
    gram = 0.5 * (gram + gram.T)
    w, _ = jacobi_eigen(gram)
    return math.sqrt(max(0.0, float(w[-1])))


@dataclass(frozen=True)
class BilinearInstance:
    """Grid a with the feasibility box |x_i| <= 1, |y_j| <= 1."""

    a: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "a", np.asarray(self.a, dtype=float))
        if self.a.ndim != 2:
            raise DimensionMismatch("grid must be two-dimensional")

    @property
    def m(self) -> int:
        return self.a.shape[0]

    @property
    def n(self) -> int:
        return self.a.shape[1]


def bilinear_value(inst: BilinearInstance, x: np.ndarray, y: np.ndarray,
                   tol: float = 1e-12) -> float:
    """sum_ij a_ij x_i y_j inside the unit box."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    if x.shape != (inst.m,) or y.shape != (inst.n,):
        raise DimensionMismatch("vector lengths must match the grid")
    if np.any(np.abs(x) > 1.0 + tol) or np.any(np.abs(y) > 1.0 + tol):
        raise InfeasiblePoint("box constraint |.| <= 1 violated")
    return float(x @ inst.a @ y)


def bilinear_max_pm1(inst: BilinearInstance) -> tuple[float, np.ndarray, np.ndarray]:
    """Exact maximum over x in {-1,+1}^m with the per-column optimal y.

    Ties resolve to the lexicographically smallest x (-1 before +1), which
    keeps the result independent of any enumeration partitioning.
    """
    if inst.m > 20 or inst.n > 20:
        raise TooLarge("exact search is limited to 20 rows/columns")
    value, idx = kernels.bilinear_pm1_best(inst.a)
    x = kernels.index_to_signs(idx, inst.m)
    s = x @ inst.a
    y = np.where(s >= 0.0, 1.0, -1.0)
    return value, x, y


def quadratic_from_bilinear(inst: BilinearInstance) -> Callable[[np.ndarray], float]:
    """Quadratic Q(x) = B(x, x) of a square instance."""
    if inst.m != inst.n:
        raise DimensionMismatch("quadratic form needs a square grid")
    def q(x: np.ndarray) -> float:
        return bilinear_value(inst, x, x)
    return q


def symmetry_check(inst: BilinearInstance) -> bool:
    if inst.m != inst.n:
        raise DimensionMismatch("symmetry is defined for square grids")
    return bool(np.array_equal(inst.a, inst.a.T))


def reconstruct_bilinear(inst: BilinearInstance) -> np.ndarray:
    """Recover the grid from its quadratic form by polarization.

    Only symmetric grids are recoverable (the quadratic form determines
    exactly the symmetric part); asymmetric input is refused.
    """
    if not symmetry_check(inst):
        raise AsymmetricForm("quadratic form does not determine an "
                             "asymmetric grid")
    # B(ei, ej) = (Q(ei+ej) - Q(ei) - Q(ej)) / 2; evaluated on the raw form
    # since ei + ej leaves the unit box when i == j
    a = inst.a
    m = inst.m
    eye = np.eye(m)
    out = np.empty((m, m))
    for i in range(m):
        for j in range(m):
            ei, ej = eye[i], eye[j]
            qij = float((ei + ej) @ a @ (ei + ej))
            out[i, j] = 0.5 * (qij - float(ei @ a @ ei) - float(ej @ a @ ej))
    return out


def projection_from_basis(basis: list[np.ndarray]) -> np.ndarray:
    """Orthogonal projector onto span(W) via Gram-Schmidt.

    Satisfies P^2 = P, P^T = P, ||P|| = 1 for nonempty W and P w = w for
    every basis vector.
    """
    if not basis:
        raise RankDeficient("empty basis")
    vecs = [np.asarray(v, dtype=float) for v in basis]
    dim = vecs[0].shape[0]
    ortho: list[np.ndarray] = []
    for v in vecs:
        if v.shape != (dim,):
            raise DimensionMismatch("basis vectors must share a dimension")
        u = v.copy()
        for q in ortho:
            u = u - np.dot(q, u) * q
        # second pass for numerical orthogonality
        for q in ortho:
            u = u - np.dot(q, u) * q
        norm = np.linalg.norm(u)
        if norm <= 1e-10 * max(1.0, np.linalg.norm(v)):
            raise RankDeficient("basis vectors are linearly dependent")
        ortho.append(u / norm)
    p = np.zeros((dim, dim))
    for q in ortho:
        p += np.outer(q, q)
    return p
