"""Unit-sphere point geometry over the extended complex plane.

The plane-plus-infinity is mapped onto the unit sphere through the south
pole (0, 0, -1); the origin therefore lands on the north pole and the unit
circle on the equator.  All distances are great-circle angles in [0, pi].
"""

from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass

from .errors import DegenerateInput

_UNIT_NORM_TOL = 1e-12
# |z|^2 beyond this would overflow intermediate sums; switch to the 1/z form
_HUGE = 1e150


@dataclass(frozen=True)
class ExtendedComplex:
    """A complex value with a first-class point at infinity.

    Infinity is canonical: the flag is set and both parts are zero.
    """

    re: float = 0.0
    im: float = 0.0
    is_infinity: bool = False

    def __post_init__(self):
        if self.is_infinity and (self.re != 0.0 or self.im != 0.0):
            object.__setattr__(self, "re", 0.0)
            object.__setattr__(self, "im", 0.0)

    @classmethod
    def from_complex(cls, z: complex) -> "ExtendedComplex":
        return cls(float(z.real), float(z.imag))

    @classmethod
    def infinity(cls) -> "ExtendedComplex":
        return cls(0.0, 0.0, True)

    @property
    def value(self) -> complex:
        if self.is_infinity:
            raise ValueError("point at infinity has no finite value")
        return complex(self.re, self.im)

    def __complex__(self) -> complex:
        return self.value


INFINITY = ExtendedComplex.infinity()


def as_xc(z) -> ExtendedComplex:
    """Coerce a complex/float/ExtendedComplex into an ExtendedComplex."""
    if isinstance(z, ExtendedComplex):
        return z
    return ExtendedComplex.from_complex(complex(z))


@dataclass(frozen=True)
class SpherePoint:
    """Point (xi, eta, zeta) on the unit sphere."""

    xi: float
    eta: float
    zeta: float

    def __post_init__(self):
        n = self.xi * self.xi + self.eta * self.eta + self.zeta * self.zeta
        if abs(n - 1.0) > _UNIT_NORM_TOL:
            raise ValueError(f"not on the unit sphere: |P|^2 = {n!r}")

    def dot(self, other: "SpherePoint") -> float:
        return (self.xi * other.xi + self.eta * other.eta
                + self.zeta * other.zeta)

    def cross_norm(self, other: "SpherePoint") -> float:
        cx = self.eta * other.zeta - self.zeta * other.eta
        cy = self.zeta * other.xi - self.xi * other.zeta
        cz = self.xi * other.eta - self.eta * other.xi
        return math.sqrt(cx * cx + cy * cy + cz * cz)

    def negated(self) -> "SpherePoint":
        return SpherePoint(-self.xi, -self.eta, -self.zeta)


@dataclass(frozen=True)
class SphericalAngle:
    """Great-circle angle; principal values lie in [0, pi]."""

    radians: float

    @property
    def degrees(self) -> float:
        return math.degrees(self.radians)


class CollinearityCase(enum.Enum):
    FIRST_CASE = "first"        # D12 + D23 = D13, sum <= pi
    SECOND_CASE = "second"      # D12 + D23 = 2*pi - D13, sum >= pi
    NOT_COLLINEAR = "not_collinear"


def project_to_sphere(z: ExtendedComplex) -> SpherePoint:
    """Image of z under stereographic projection through (0, 0, -1).

    0 -> north pole, the unit circle -> equator, infinity -> south pole.
    """
    z = as_xc(z)
    if z.is_infinity:
        return SpherePoint(0.0, 0.0, -1.0)
    x, y = z.re, z.im
    r2 = x * x + y * y
    if r2 > _HUGE:
        # work with w = 1/zbar = z/|z|^2 to avoid overflow
        w = complex(x, y) / r2
        w2 = abs(w) ** 2
        return SpherePoint(2.0 * w.real, 2.0 * w.imag, 2.0 * w2 - 1.0)
    d = r2 + 1.0
    return SpherePoint(2.0 * x / d, 2.0 * y / d, (1.0 - r2) / d)


def project_to_plane(p: SpherePoint) -> ExtendedComplex:
    """Inverse stereographic projection; the south pole maps to infinity."""
    d = 1.0 + p.zeta
    if d == 0.0:
        return INFINITY
    return ExtendedComplex(p.xi / d, p.eta / d)


def antipode(z: ExtendedComplex) -> ExtendedComplex:
    """Plane image of the diametrically opposite sphere point: -1/conj(z)."""
    z = as_xc(z)
    if z.is_infinity:
        return ExtendedComplex(0.0, 0.0)
    if z.re == 0.0 and z.im == 0.0:
        return INFINITY
    w = -1.0 / complex(z.re, -z.im)
    return ExtendedComplex.from_complex(w)


def spherical_distance(z1: ExtendedComplex, z2: ExtendedComplex) -> SphericalAngle:
    """Principal great-circle distance between the sphere images of z1, z2.

    Distance 0 identifies equal points; the full multi-valued family
    {+/-omega + 2k*pi} is only consulted by :func:`collinearity_case`.
    """
    p1 = project_to_sphere(as_xc(z1))
    p2 = project_to_sphere(as_xc(z2))
    # atan2 form stays accurate near 0 and pi where arccos loses digits
    return SphericalAngle(math.atan2(p1.cross_norm(p2), p1.dot(p2)))


def collinearity_case(z1, z2, z3, tol: float) -> CollinearityCase:
    """Classify three points against the spherical straight-line equality.

    FIRST_CASE:  D12 + D23 = D13 with the sum at most pi.
    SECOND_CASE: D12 + D23 = 2*pi - D13 with the sum at least pi.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    a, b, c = as_xc(z1), as_xc(z2), as_xc(z3)
    if a == b == c:
        raise DegenerateInput("coincident triple")
    d12 = spherical_distance(a, b).radians
    d23 = spherical_distance(b, c).radians
    d13 = spherical_distance(a, c).radians
    s = d12 + d23
    # chain inequality D13 <= D12 + D23 <= 2*pi - D13 holds on the sphere
    assert d13 <= s + 1e-12 and s <= 2.0 * math.pi - d13 + 1e-12
    if abs(s - d13) <= tol and s <= math.pi + tol:
        return CollinearityCase.FIRST_CASE
    if abs(s - (2.0 * math.pi - d13)) <= tol and s >= math.pi - tol:
        return CollinearityCase.SECOND_CASE
    return CollinearityCase.NOT_COLLINEAR


def random_extended_complex(rng, span: float = 10.0) -> ExtendedComplex:
    """Seeded sample helper used by the property sweeps (finite values)."""
    return ExtendedComplex(float(rng.uniform(-span, span)),
                           float(rng.uniform(-span, span)))


def rotate_point(p: SpherePoint, rot) -> SpherePoint:
    """Apply a 3x3 rotation matrix (list/array rows) to a sphere point."""
    v = (p.xi, p.eta, p.zeta)
    out = [sum(rot[i][j] * v[j] for j in range(3)) for i in range(3)]
    n = math.sqrt(sum(c * c for c in out))
    return SpherePoint(out[0] / n, out[1] / n, out[2] / n)


def _angle_between(p1: SpherePoint, p2: SpherePoint) -> float:
    return math.atan2(p1.cross_norm(p2), p1.dot(p2))


def sphere_distance_between(p1: SpherePoint, p2: SpherePoint) -> SphericalAngle:
    """Distance of two already-projected sphere points."""
    return SphericalAngle(_angle_between(p1, p2))
