"""Pauli matrices, Kronecker delta and permutation symbols.

The Pauli identity checks run on integer-valued complex matrices, so every
comparison below is exact; floating point only enters through the metric
weighting and the determinant checks.
"""

from __future__ import annotations

import math
from typing import Sequence

import numpy as np

from .errors import DimensionMismatch, SingularMetric

_PAULI = (
    np.array([[0, 1], [1, 0]], dtype=complex),
    np.array([[0, -1j], [1j, 0]], dtype=complex),
    np.array([[1, 0], [0, -1]], dtype=complex),
)
_I2 = np.eye(2, dtype=complex)


def pauli(i: int) -> np.ndarray:
    """Pauli matrix, 1-based label in {1, 2, 3}."""
    if i not in (1, 2, 3):
        raise IndexError("pauli label must be 1, 2 or 3")
    return _PAULI[i - 1].copy()


def kronecker(i: int, j: int) -> int:
    return 1 if i == j else 0


def permutation_sign(indices: Sequence[int]) -> int:
    """+1 / -1 for even / odd permutations of (0..n-1), 0 on repeats."""
    idx = list(indices)
    n = len(idx)
    if any(not (0 <= v < n) for v in idx):
        raise ValueError(f"indices must lie in [0, {n})")
    if len(set(idx)) != n:
        return 0
    sign = 1
    for i in range(n):
        while idx[i] != i:
            j = idx[i]
            idx[i], idx[j] = idx[j], idx[i]
            sign = -sign
    return sign


def levi_civita(indices: Sequence[int], covariant: bool = False) -> int:
    """Permutation symbol of any rank >= 2.

    With covariant=True the rank-4 symbol picks up the sign flip of the
    index-lowered tensor (eps_lower = -eps_upper for rank 4).
    """
    if len(indices) < 2:
        raise ValueError("rank must be at least 2")
    sign = permutation_sign(indices)
    if covariant and len(indices) == 4:
        return -sign
    return sign


def weighted_epsilon(indices: Sequence[int], g_det: float,
                     raised: bool = False) -> float:
    """Metric-weighted symbol: sqrt|g| * sign lowered, sign / sqrt|g| raised."""
    if g_det == 0.0:
        raise SingularMetric("metric determinant must be nonzero")
    sign = permutation_sign(indices)
    w = math.sqrt(abs(g_det))
    return sign / w if raised else sign * w


def pauli_identity_check(i: int, j: int) -> bool:
    """Verify sigma_i^2 = I, the anticommutator rule and the product rule.

    sigma_i sigma_j = delta_ij I + i sum_k eps_ijk sigma_k, all exactly.
    """
    si, sj = pauli(i), pauli(j)
    if not np.array_equal(si @ si, _I2):
        return False
    anti = si @ sj + sj @ si
    if not np.array_equal(anti, 2 * kronecker(i, j) * _I2):
        return False
    rhs = kronecker(i, j) * _I2.copy()
    for k in (1, 2, 3):
        eps = permutation_sign((i - 1, j - 1, k - 1))
        if eps:
            rhs = rhs + 1j * eps * pauli(k)
    return np.array_equal(si @ sj, rhs)


def pauli_commutator_structure(i: int, j: int) -> bool:
    """[sigma_i, sigma_j] = 2i sum_k eps_ijk sigma_k, exactly."""
    comm = pauli(i) @ pauli(j) - pauli(j) @ pauli(i)
    rhs = np.zeros((2, 2), dtype=complex)
    for k in (1, 2, 3):
        eps = permutation_sign((i - 1, j - 1, k - 1))
        if eps:
            rhs = rhs + 2j * eps * pauli(k)
    return np.array_equal(comm, rhs)


def orbit_transform(t: np.ndarray, a: np.ndarray) -> np.ndarray:
    """Tensor-density rule T'_ij = det(A) * A_ik A_jl T_kl."""
    t = np.asarray(t, dtype=float)
    a = np.asarray(a, dtype=float)
    if t.ndim != 2 or t.shape[0] != t.shape[1]:
        raise DimensionMismatch("T must be square")
    if a.shape != t.shape:
        raise DimensionMismatch("A must match T's shape")
    return float(np.linalg.det(a)) * (a @ t @ a.T)


def conj_det_check(m: np.ndarray, rtol: float = 1e-12) -> bool:
    """det(conj(M)) equals conj(det(M)) within relative tolerance."""
    m = np.asarray(m, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise DimensionMismatch("M must be square")
    lhs = np.linalg.det(np.conj(m))
    rhs = np.conj(np.linalg.det(m))
    return abs(lhs - rhs) <= rtol * max(1.0, abs(rhs))


def epsilon_contract(vectors: Sequence[np.ndarray]) -> float:
    """Full contraction eps_{i1..in} v1_{i1} ... vn_{in} (= det of the stack);
    nonzero exactly when the vectors are linearly independent."""
    mat = np.column_stack([np.asarray(v, dtype=float) for v in vectors])
    if mat.shape[0] != mat.shape[1]:
        raise DimensionMismatch("need n vectors of dimension n")
    return float(np.linalg.det(mat))
