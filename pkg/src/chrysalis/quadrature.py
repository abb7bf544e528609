"""Adaptive Simpson quadrature with caller-supplied kink splitting."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

from .errors import ConvergenceFailure

_MAX_DEPTH = 40


@dataclass(frozen=True)
class QuadratureResult:
    value: float
    abs_error_estimate: float
    evaluations: int

    def __post_init__(self):
        if self.abs_error_estimate < 0.0:
            raise ValueError("error estimate must be nonnegative")


def integrate(f: Callable[[float], float], a: float, b: float,
              tol: float = 1e-10,
              kinks: Sequence[float] = ()) -> QuadratureResult:
    """Integrate f over [a, b] by adaptive Simpson bisection.

    Each subinterval is refined until its local error estimate drops below
    tol * (local width) / (b - a).  Interior points where f loses smoothness
    (e.g. an |x| factor) should be passed in `kinks`; the interval is split
    there so the recursion never straddles them.

    Raises ConvergenceFailure when any subinterval exhausts the depth budget.
    """
    if not a < b:
        raise ValueError("integration needs a < b")
    if not tol > 0.0:
        raise ValueError("tol must be positive")

    cuts = sorted({a, b, *(k for k in kinks if a < k < b)})
    total = 0.0
    err = 0.0
    evals = 0
    span = b - a
    for lo, hi in zip(cuts, cuts[1:]):
        flo, fhi = f(lo), f(hi)
        mid = 0.5 * (lo + hi)
        fmid = f(mid)
        evals += 3
        whole = (hi - lo) / 6.0 * (flo + 4.0 * fmid + fhi)
        v, e, n = _refine(f, lo, hi, flo, fmid, fhi, whole,
                          tol * (hi - lo) / span, 0)
        total += v
        err += e
        evals += n
    return QuadratureResult(total, err, evals)


def _refine(f, a, b, fa, fm, fb, whole, tol, depth):
    m = 0.5 * (a + b)
    lm = 0.5 * (a + m)
    rm = 0.5 * (m + b)
    flm, frm = f(lm), f(rm)
    left = (m - a) / 6.0 * (fa + 4.0 * flm + fm)
    right = (b - m) / 6.0 * (fm + 4.0 * frm + fb)
    delta = left + right - whole
    if abs(delta) <= 15.0 * tol:
        return left + right + delta / 15.0, abs(delta) / 15.0, 2
    if depth >= _MAX_DEPTH:
        raise ConvergenceFailure(
            f"depth {_MAX_DEPTH} exhausted on [{a!r}, {b!r}]")
    lv, le, ln = _refine(f, a, m, fa, flm, fm, left, tol / 2.0, depth + 1)
    rv, re, rn = _refine(f, m, b, fm, frm, fb, right, tol / 2.0, depth + 1)
    return lv + rv, le + re, ln + rn + 2
