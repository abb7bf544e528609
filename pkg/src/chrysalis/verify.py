"""Self-check suite reproducing every printed constant of the construction."""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import onions
from .lattice import count_lattice_points
from .onions import (CENTER_INVSQ_COEFF, CENTER_QUARTIC_COEFF, OnionColor,
                     blue_quartic_discriminant, blue_root_newton,
                     gaussian_speed, geodesic_integrand, onion_eval,
                     parent_x, parent_x_root, red_green_intersections)
from .protocol.keys import keyspace_counts
from .quadrature import integrate


@dataclass(frozen=True)
class VerificationRow:
    name: str
    paper_value: float
    computed: float
    tolerance: float

    @property
    def abs_diff(self) -> float:
        return abs(self.computed - self.paper_value)

    @property
    def passed(self) -> bool:
        return self.abs_diff <= self.tolerance


@dataclass(frozen=True)
class VerificationReport:
    rows: list[VerificationRow]

    @property
    def all_passed(self) -> bool:
        return all(r.passed for r in self.rows)


def gaussian_arc_length(tol: float = 1e-9) -> float:
    return integrate(gaussian_speed, 0.0, 2.0 * math.pi, tol).value


def geodesic_arc_length(tol: float = 1e-12) -> float:
    return integrate(geodesic_integrand, -100.0, 100.0, tol,
                     kinks=(0.0,)).value


def blue_definite_integral(tol: float = 1e-9) -> float:
    a = 4.43798
    return integrate(lambda x: onion_eval(OnionColor.BLUE, x).real,
                     -a, a, tol).value


def verify_suite() -> VerificationReport:
    """Recompute and compare every printed constant."""
    rows: list[VerificationRow] = []

    def row(name, paper, computed, tol):
        rows.append(VerificationRow(name, paper, computed, tol))

    row("gaussian arc length", 9.68845, gaussian_arc_length(), 1e-4)
    row("geodesic arc length", 0.000172061, geodesic_arc_length(), 2e-7)
    row("blue definite integral", 88.8377, blue_definite_integral(), 1e-3)
    a = 4.43798
    antiderivative = 2.0 * (12.511 * a - a ** 5 / (5.0 * onions.PI3))
    row("blue integral (closed form)", 88.8377, antiderivative, 1e-3)
    row("blue root (newton)", 4.43798, blue_root_newton(4.0), 1e-5)
    row("blue inverse constant", 0.419626,
        math.pi ** 0.75 / 1000.0 ** 0.25, 1e-6)
    row("blue discriminant magnitude", 16.8177,
        abs(blue_quartic_discriminant()), 1e-3)
    row("osculating quartic coefficient", 0.0752536,
        CENTER_QUARTIC_COEFF, 1e-6)
    row("osculating inverse-square coefficient", 2.58386,
        CENTER_INVSQ_COEFF, 1e-5)
    lo, hi = red_green_intersections()
    row("red/green intersection low", 0.0, lo, 0.0)
    row("red/green intersection high", 4.0, hi, 0.0)
    counts = keyspace_counts()
    row("eight-element permutations", 40320.0,
        float(counts.eight_element), 0.0)
    row("six-element permutations", 720.0, float(counts.six_element), 0.0)
    row("base-216 four-permutations", 2116828080.0,
        float(counts.four_of_base), 0.0)
    worst_root = max(abs(parent_x(parent_x_root(n)))
                     for n in range(-2, 3))
    row("parent X root residual", 0.0, worst_root, 1e-12)
    for r, expected in ((1, 5), (2, 13), (3, 29)):
        row(f"lattice count N({r})", float(expected),
            float(count_lattice_points(float(r)).count), 0.0)
    return VerificationReport(rows)
