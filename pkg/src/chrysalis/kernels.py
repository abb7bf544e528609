"""Hot inner loops: disc lattice counting and +/-1 bilinear enumeration.

Every kernel exists twice: a plain-loop version compiled with numba's
``@njit`` and a vectorized pure-numpy fallback.  The active backend is
chosen once at import time: numba when it is importable, numpy when it
is not or when ``CHRYSALIS_NO_NUMBA=1`` is set.  ``benchmarks/bench_kernels.py``
times the two paths against each other.
"""

from __future__ import annotations

import math
import os

import numpy as np


def _select_backend() -> str:
    flag = os.environ.get("CHRYSALIS_NO_NUMBA", "").strip().lower()
    if flag in {"1", "true", "yes", "on"}:
        return "numpy"
    try:
        import numba  # noqa: F401
    except ImportError:
        return "numpy"
    return "numba"


BACKEND = _select_backend()


# -- loop bodies (numba-compilable, also runnable as plain python) -----------

def _disc_count_loop(r: float) -> int:
    # points (m, n) with m^2 + n^2 <= r^2, one row sum per m
    big = int(math.floor(r))
    r2 = r * r
    total = 0
    for m in range(-big, big + 1):
        d = r2 - m * m
        k = int(math.sqrt(d))
        while (k + 1) * (k + 1) <= d:
            k += 1
        while k * k > d:
            k -= 1
        total += 2 * k + 1
    return total


def _disc_count_naive_loop(r: float) -> int:
    big = int(math.floor(r))
    r2 = r * r
    total = 0
    for m in range(-big, big + 1):
        mm = m * m
        for n in range(-big, big + 1):
            if mm + n * n <= r2:
                total += 1
    return total


def _bilinear_best_loop(a: np.ndarray) -> tuple[float, int]:
    # max over x in {-1,+1}^m of sum_j |sum_i a[i,j] x_i|; ties keep the
    # lexicographically smallest x (bit 0 of the index is x_0, -1 < +1)
    m, n = a.shape
    best = -math.inf
    best_idx = 0
    for idx in range(1 << m):
        val = 0.0
        for j in range(n):
            s = 0.0
            for i in range(m):
                if (idx >> (m - 1 - i)) & 1:
                    s += a[i, j]
                else:
                    s -= a[i, j]
            val += abs(s)
        if val > best:
            best = val
            best_idx = idx
    return best, best_idx


def _bilinear_exhaustive_loop(a: np.ndarray) -> float:
    m, n = a.shape
    best = -math.inf
    for ix in range(1 << m):
        for iy in range(1 << n):
            val = 0.0
            for i in range(m):
                xi = 1.0 if (ix >> (m - 1 - i)) & 1 else -1.0
                for j in range(n):
                    yj = 1.0 if (iy >> (n - 1 - j)) & 1 else -1.0
                    val += a[i, j] * xi * yj
            if val > best:
                best = val
    return best


# -- vectorized numpy fallbacks ----------------------------------------------

def _disc_count_numpy(r: float) -> int:
    big = int(math.floor(r))
    if big < 0:
        return 0
    m = np.arange(-big, big + 1, dtype=np.int64)
    d = r * r - (m * m).astype(np.float64)
    k = np.floor(np.sqrt(d)).astype(np.int64)
    k += ((k + 1.0) * (k + 1.0) <= d).astype(np.int64)
    k -= (k.astype(np.float64) * k > d).astype(np.int64)
    return int(np.sum(2 * k + 1))


def _disc_count_naive_numpy(r: float) -> int:
    big = int(math.floor(r))
    m = np.arange(-big, big + 1, dtype=np.int64)
    grid = m[:, None] ** 2 + m[None, :] ** 2
    return int(np.count_nonzero(grid <= r * r))


def _disc_sweep_numpy(r_max: int) -> np.ndarray:
    return np.array([_disc_count_numpy(float(r)) for r in range(r_max + 1)],
                    dtype=np.int64)


def _sign_table(bits: int) -> np.ndarray:
    idx = np.arange(1 << bits, dtype=np.int64)
    shifts = bits - 1 - np.arange(bits)
    return (2 * ((idx[:, None] >> shifts) & 1) - 1).astype(np.float64)


def _bilinear_best_numpy(a: np.ndarray) -> tuple[float, int]:
    m = a.shape[0]
    best = -math.inf
    best_idx = 0
    chunk = 1 << 14
    for start in range(0, 1 << m, chunk):
        stop = min(start + chunk, 1 << m)
        idx = np.arange(start, stop, dtype=np.int64)
        shifts = m - 1 - np.arange(m)
        x = (2 * ((idx[:, None] >> shifts) & 1) - 1).astype(np.float64)
        vals = np.abs(x @ a).sum(axis=1)
        k = int(np.argmax(vals))
        if vals[k] > best:
            best = float(vals[k])
            best_idx = start + k
    return best, best_idx


def _bilinear_exhaustive_numpy(a: np.ndarray) -> float:
    x = _sign_table(a.shape[0])
    y = _sign_table(a.shape[1])
    return float((x @ a @ y.T).max())


# -- backend dispatch ---------------------------------------------------------

if BACKEND == "numba":
    from numba import njit

    _disc_count_impl = njit(cache=True)(_disc_count_loop)
    _disc_count_naive_impl = njit(cache=True)(_disc_count_naive_loop)
    _bilinear_best_impl = njit(cache=True)(_bilinear_best_loop)
    _bilinear_exhaustive_impl = njit(cache=True)(_bilinear_exhaustive_loop)
else:
    _disc_count_impl = _disc_count_numpy
    _disc_count_naive_impl = _disc_count_naive_numpy
    _bilinear_best_impl = _bilinear_best_numpy
    _bilinear_exhaustive_impl = _bilinear_exhaustive_numpy


def _disc_sweep_loop(r_max: int) -> np.ndarray:
    counts = np.empty(r_max + 1, dtype=np.int64)
    for r in range(r_max + 1):
        counts[r] = _disc_count_impl(float(r))
    return counts


_disc_sweep_impl = njit(cache=True)(_disc_sweep_loop) if BACKEND == "numba" \
    else _disc_sweep_loop


def disc_count(r: float) -> int:
    """Lattice points inside radius r, summed row by row."""
    if r < 0:
        raise ValueError("radius must be nonnegative")
    return int(_disc_count_impl(float(r)))


def disc_count_naive(r: float) -> int:
    """Same count by brute-force enumeration of the full square grid."""
    if r < 0:
        raise ValueError("radius must be nonnegative")
    return int(_disc_count_naive_impl(float(r)))


def disc_sweep(r_max: int) -> np.ndarray:
    """Counts at every integer radius 0..r_max (index = radius)."""
    if r_max < 0:
        raise ValueError("r_max must be nonnegative")
    return np.asarray(_disc_sweep_impl(int(r_max)))


def bilinear_pm1_best(a: np.ndarray) -> tuple[float, int]:
    """Best value over x in {-1,+1}^rows with the per-column optimal y.

    Returns (value, index); decode the index with :func:`index_to_signs`.
    """
    a = np.ascontiguousarray(a, dtype=np.float64)
    val, idx = _bilinear_best_impl(a)
    return float(val), int(idx)


def bilinear_pm1_exhaustive(a: np.ndarray) -> float:
    """Oracle: plain max over every (x, y) sign pattern, no shortcuts."""
    a = np.ascontiguousarray(a, dtype=np.float64)
    return float(_bilinear_exhaustive_impl(a))


def index_to_signs(idx: int, m: int) -> np.ndarray:
    """Expand an enumeration index into its +/-1 vector (bit m-1 first)."""
    return np.array([1.0 if (idx >> (m - 1 - i)) & 1 else -1.0
                     for i in range(m)])
