"""Circles, lines and points of the extended plane as 2x2 Hermitian forms.

A circle is the zero set of  C(z, zbar) = A*z*zbar + B*z + conj(B)*zbar + D
with real A, D.  Real multiples describe the same circle; the discriminant
A*D - |B|^2 classifies the zero set.
"""

from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass

from .errors import DegenerateCircle, DegenerateInput, NotACircle, NotAPencil
from .sphere import INFINITY, ExtendedComplex, as_xc

_PROP_TOL = 1e-12


class CircleClass(enum.Enum):
    REAL_CIRCLE = "real_circle"
    POINT_CIRCLE = "point_circle"
    IMAGINARY_CIRCLE = "imaginary_circle"
    STRAIGHT_LINE = "straight_line"
    DEGENERATE = "degenerate"


@dataclass(frozen=True)
class HermitianCircle:
    """Coefficients (A, B, D); the fourth entry is implicitly conj(B)."""

    a: float
    b: complex
    d: float

    def __post_init__(self):
        if self.a == 0.0 and self.b == 0 and self.d == 0.0:
            raise DegenerateInput("all coefficients zero")

    def evaluate(self, z) -> float:
        """C(z, zbar); real by construction."""
        z = complex(z)
        return (self.a * (z * z.conjugate()).real
                + 2.0 * (self.b * z).real + self.d)

    def scaled(self, lam: float) -> "HermitianCircle":
        if lam == 0.0:
            raise ValueError("scale factor must be nonzero")
        return HermitianCircle(lam * self.a, lam * self.b, lam * self.d)

    def canonical(self) -> "HermitianCircle":
        """Normal form under real scaling: A = 1, or A = 0 with |B| = 1.

        For lines the residual sign freedom is fixed by Re(B) > 0
        (Im(B) > 0 on the boundary), making equality tests meaningful.
        """
        if self.a != 0.0:
            return self.scaled(1.0 / self.a)
        mag = abs(self.b)
        c = self.scaled(1.0 / mag)
        if c.b.real < 0.0 or (c.b.real == 0.0 and c.b.imag < 0.0):
            c = c.scaled(-1.0)
        return c


def circle_from_center_radius(gamma: complex, rho_sq: float) -> HermitianCircle:
    """Circle |z - gamma|^2 = rho_sq; negative rho_sq gives an imaginary circle."""
    gamma = complex(gamma)
    return HermitianCircle(1.0, -gamma.conjugate(),
                           abs(gamma) ** 2 - float(rho_sq))


def discriminant(c: HermitianCircle) -> float:
    return c.a * c.d - abs(c.b) ** 2


def classify(c: HermitianCircle) -> CircleClass:
    delta = discriminant(c)
    if c.a != 0.0:
        if delta < 0.0:
            return CircleClass.REAL_CIRCLE
        if delta == 0.0:
            return CircleClass.POINT_CIRCLE
        return CircleClass.IMAGINARY_CIRCLE
    if delta < 0.0:
        return CircleClass.STRAIGHT_LINE
    return CircleClass.DEGENERATE


def center_radius(c: HermitianCircle) -> tuple[complex, float]:
    """Center and signed rho^2 (= -Delta/A^2); lines are rejected."""
    if c.a == 0.0:
        raise NotACircle("A = 0 describes a straight line")
    gamma = -c.b.conjugate() / c.a
    return gamma, -discriminant(c) / (c.a * c.a)


def delta12(c1: HermitianCircle, c2: HermitianCircle) -> float:
    """Polarized discriminant: (A1*D2 + A2*D1)/2 - Re(B1*conj(B2))."""
    return (0.5 * (c1.a * c2.d + c2.a * c1.d)
            - (c1.b * c2.b.conjugate()).real)


def orthogonal(c1: HermitianCircle, c2: HermitianCircle, tol: float) -> bool:
    """True when the pairing Delta12 vanishes relative to sqrt(|D1*D2|).

    For two real circles this is the right-angle criterion
    delta^2 = rho1^2 + rho2^2 on center distance delta.
    """
    d1, d2 = discriminant(c1), discriminant(c2)
    if d1 == 0.0 or d2 == 0.0:
        raise DegenerateCircle("orthogonality needs nonzero discriminants")
    return abs(delta12(c1, c2)) <= tol * math.sqrt(abs(d1 * d2))


def cos_angle(c1: HermitianCircle, c2: HermitianCircle) -> float:
    """Cosine of the angle between two positively oriented real circles.

    Equals (rho1^2 + rho2^2 - delta^2) / (2*rho1*rho2): +1 when the smaller
    circle touches the greater from inside, -1 at external tangency, and
    inside [-1, 1] exactly when the circles meet in a real point.
    """
    for c in (c1, c2):
        if classify(c) is not CircleClass.REAL_CIRCLE:
            raise DegenerateCircle("cos_angle needs two real circles")
    n1 = c1.canonical()
    n2 = c2.canonical()
    return -delta12(n1, n2) / math.sqrt(discriminant(n1) * discriminant(n2))


@dataclass(frozen=True)
class PencilCoefficients:
    lambda1: float
    lambda2: float

    def __post_init__(self):
        if self.lambda1 == 0.0 and self.lambda2 == 0.0:
            raise DegenerateInput("pencil coefficients both zero")


def _proportional(c1: HermitianCircle, c2: HermitianCircle) -> bool:
    v1 = (c1.a, c1.b.real, c1.b.imag, c1.d)
    v2 = (c2.a, c2.b.real, c2.b.imag, c2.d)
    scale = max(abs(x) for x in v1 + v2)
    for i in range(4):
        for j in range(i + 1, 4):
            if abs(v1[i] * v2[j] - v1[j] * v2[i]) > _PROP_TOL * scale * scale:
                return False
    return True


def pencil_member(c1: HermitianCircle, c2: HermitianCircle,
                  lam: PencilCoefficients) -> HermitianCircle:
    """Real-linear combination lambda1*c1 + lambda2*c2 of a circle pencil."""
    if _proportional(c1, c2):
        raise NotAPencil("proportional circles span no pencil")
    out = HermitianCircle(lam.lambda1 * c1.a + lam.lambda2 * c2.a,
                          lam.lambda1 * c1.b + lam.lambda2 * c2.b,
                          lam.lambda1 * c1.d + lam.lambda2 * c2.d)
    expected = (discriminant(c1) * lam.lambda1 ** 2
                + 2.0 * delta12(c1, c2) * lam.lambda1 * lam.lambda2
                + discriminant(c2) * lam.lambda2 ** 2)
    scale = 1.0 + abs(expected)
    assert abs(discriminant(out) - expected) <= 1e-10 * scale
    return out


def invert_point(c: HermitianCircle, z: ExtendedComplex) -> ExtendedComplex:
    """Reflect z in the real circle c: z -> gamma + rho^2/conj(z - gamma)."""
    if classify(c) is not CircleClass.REAL_CIRCLE:
        raise DegenerateCircle("inversion mirror must be a real circle")
    gamma, rho_sq = center_radius(c)
    z = as_xc(z)
    if z.is_infinity:
        return ExtendedComplex.from_complex(gamma)
    w = complex(z.re, z.im) - gamma
    if w == 0:
        return INFINITY
    return ExtendedComplex.from_complex(gamma + rho_sq / w.conjugate())


def invert_circle(mirror: HermitianCircle, c: HermitianCircle) -> HermitianCircle:
    """Image of circle/line c under inversion in a real circle.

    Uses the closed-form coefficient transport of the Hermitian form under
    the anti-Moebius substitution, then verifies three transported points.
    """
    if classify(mirror) is not CircleClass.REAL_CIRCLE:
        raise DegenerateCircle("inversion mirror must be a real circle")
    gamma, rho_sq = center_radius(mirror)
    s = rho_sq - abs(gamma) ** 2
    a, b, d = c.a, c.b, c.d
    bc = b.conjugate()
    a2 = a * abs(gamma) ** 2 + 2.0 * (b * gamma).real + d
    b2 = (a * gamma.conjugate() * s + b * s - bc * gamma.conjugate() ** 2
          - d * gamma.conjugate())
    d2 = a * s * s - 2.0 * s * (b * gamma).real + d * abs(gamma) ** 2
    image = HermitianCircle(a2, b2, d2)
    if classify(c) in (CircleClass.REAL_CIRCLE, CircleClass.STRAIGHT_LINE):
        for z in _sample_points(c, 3):
            w = invert_point(mirror, z)
            if not w.is_infinity:
                scale = max(1.0, abs(image.a), abs(image.b), abs(image.d))
                residual = image.evaluate(complex(w.re, w.im))
                assert abs(residual) <= 1e-6 * scale * (1.0 + abs(w.value)) ** 2
    return image


def _sample_points(c: HermitianCircle, n: int) -> list[ExtendedComplex]:
    """n points on the zero set of a real circle or line."""
    kind = classify(c)
    if kind is CircleClass.REAL_CIRCLE:
        gamma, rho_sq = center_radius(c)
        rho = math.sqrt(rho_sq)
        return [ExtendedComplex.from_complex(
                    gamma + rho * cmath.exp(2j * math.pi * k / n))
                for k in range(n)]
    if kind is CircleClass.STRAIGHT_LINE:
        z0 = -c.d * c.b.conjugate() / (2.0 * abs(c.b) ** 2)
        direction = 1j * c.b.conjugate() / abs(c.b)
        return [ExtendedComplex.from_complex(z0 + (k - n // 2) * direction)
                for k in range(n)]
    raise DegenerateCircle("no real points to sample")


def cross_ratio(z1, z2, z3, z4) -> tuple[complex, bool]:
    """(z1-z3)(z2-z4) / ((z1-z4)(z2-z3)) with infinities cancelled by limits.

    The boolean reports concyclicity: four points of the completed plane lie
    on one circle/line exactly when the cross ratio is real.
    """
    pts = [as_xc(z) for z in (z1, z2, z3, z4)]
    for i in range(4):
        for j in range(i + 1, 4):
            if pts[i] == pts[j]:
                raise DegenerateInput("cross ratio needs distinct points")
    inf_at = [i for i, p in enumerate(pts) if p.is_infinity]
    if len(inf_at) > 1:
        raise DegenerateInput("cross ratio needs distinct points")
    if inf_at:
        k = inf_at[0]
        v = [None if p.is_infinity else complex(p.re, p.im) for p in pts]
        if k == 0:
            value = (v[1] - v[3]) / (v[1] - v[2])
        elif k == 1:
            value = (v[0] - v[2]) / (v[0] - v[3])
        elif k == 2:
            value = (v[1] - v[3]) / (v[0] - v[3])
        else:
            value = (v[0] - v[2]) / (v[1] - v[2])
    else:
        a, b, c, d = (complex(p.re, p.im) for p in pts)
        value = ((a - c) * (b - d)) / ((a - d) * (b - c))
    concyclic = abs(value.imag) <= 1e-9 * (1.0 + abs(value))
    return value, concyclic


def tangent_direction(c: HermitianCircle, z: complex) -> complex:
    """Unit tangent of the positively oriented circle c at a boundary point."""
    gamma, rho_sq = center_radius(c)
    w = complex(z) - gamma
    if abs(abs(w) ** 2 - rho_sq) > 1e-6 * (1.0 + rho_sq):
        raise ValueError("point is not on the circle")
    return 1j * w / abs(w)


def inversion_tangent_map(mirror: HermitianCircle, z: complex,
                          t: complex) -> complex:
    """Pushforward of tangent t at z through inversion in the mirror circle.

    The reflection map is anti-holomorphic, so dz* = -rho^2/conj(z-gamma)^2
    * conj(dz); angles between curves flip sign under it.
    """
    gamma, rho_sq = center_radius(mirror)
    w = complex(z) - gamma
    return -rho_sq / (w.conjugate() ** 2) * t.conjugate()
