"""The three onion functions and their differential geometry.

green(z) = -z^4/pi^3, red(z) = -4z^3/pi^3, blue(z) = 12.511 - z^4/pi^3.
Green and blue both differentiate to red.  The blue curve restricted to the
reals carries the curvature / osculating-circle / arc-length quantities; the
parent functions X, Y supply the periodic label material for the protocol.
"""

from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass
from typing import Callable

from .errors import BranchDomain, InfiniteRadius, NumericalDomain

PI3 = math.pi ** 3
PI6 = math.pi ** 6
PI12 = math.pi ** 12

# stored as the printed literal so downstream constants reproduce bit-stably;
# (12.511 * pi^3 = 387.92, the rounded 387.9 appears in some displays)
BLUE_LEVEL = 12.511

# closed-form constants of the osculating center ordinate
CENTER_QUARTIC_COEFF = 7.0 / (3.0 * PI3)     # 0.0752536...
CENTER_INVSQ_COEFF = PI3 / 12.0              # 2.58386...


class OnionColor(enum.Enum):
    GREEN = "green"
    RED = "red"
    BLUE = "blue"


def onion_eval(color: OnionColor, z: complex) -> complex:
    if color is OnionColor.GREEN:
        return -(z ** 4) / PI3
    if color is OnionColor.RED:
        return -4.0 * z ** 3 / PI3
    return BLUE_LEVEL - z ** 4 / PI3


def red_derivative(z: complex) -> complex:
    """Derivative of the red onion, -12 z^2 / pi^3 (no onion has this form)."""
    return -12.0 * z ** 2 / PI3


def onion_derivative(color: OnionColor) -> OnionColor | Callable[[complex], complex]:
    """Green and blue differentiate to red; red's derivative is returned raw."""
    if color in (OnionColor.GREEN, OnionColor.BLUE):
        return OnionColor.RED
    return red_derivative


def onion_roots(color: OnionColor) -> list[complex]:
    """All roots, sorted by (Re, Im); green/red return the single root 0."""
    if color in (OnionColor.GREEN, OnionColor.RED):
        return [0j]
    r = (BLUE_LEVEL * PI3) ** 0.25
    roots = [complex(r), complex(-r), complex(0, r), complex(0, -r)]
    return sorted(roots, key=lambda z: (z.real, z.imag))


def onion_inverse(color: OnionColor, w: float, branch: int = 0) -> complex:
    """Real-branch inverse; branch counts quadrants counterclockwise.

    blue:  z = (pi^3 (12.511 - w))^(1/4) * i^branch  for w <= 12.511
           (the radical equals 0.419626 * (12511 - 1000 w)^(1/4))
    red:   z = cbrt(-pi^3 w / 4) * exp(2 pi i branch / 3)
    green: z = (-pi^3 w)^(1/4) * i^branch            for w <= 0
    """
    quadrant = (1.0, 1j, -1.0, -1j)
    w = float(w)
    if color is OnionColor.BLUE:
        radicand = PI3 * (BLUE_LEVEL - w)
        if radicand < 0.0:
            raise BranchDomain("blue inverse needs w <= 12.511")
        return radicand ** 0.25 * quadrant[branch % 4]
    if color is OnionColor.GREEN:
        radicand = -PI3 * w
        if radicand < 0.0:
            raise BranchDomain("green inverse needs w <= 0")
        return radicand ** 0.25 * quadrant[branch % 4]
    base = -PI3 * w / 4.0
    root = math.copysign(abs(base) ** (1.0 / 3.0), base)
    return root * cmath.exp(2j * math.pi * (branch % 3) / 3.0)


def red_green_intersections() -> list[float]:
    """Solutions of -z^4/pi^3 = -4z^3/pi^3, i.e. z^3 (z - 4) = 0."""
    return [0.0, 4.0]


def gaussian_expr(theta: float) -> float:
    """i e^{-i theta} - i e^{i theta}, identically 2 sin(theta)."""
    value = 1j * cmath.exp(-1j * theta) - 1j * cmath.exp(1j * theta)
    if abs(value.imag) > 1e-15:
        raise NumericalDomain(f"imaginary residue {value.imag!r}")
    return value.real


def gaussian_curve(t: float) -> tuple[float, float]:
    """Parametric point (2 sin t, cos t)."""
    return 2.0 * math.sin(t), math.cos(t)


def gaussian_speed(t: float) -> float:
    """Arc-length integrand sqrt(4 cos^2 t + sin^2 t) of the curve."""
    return math.sqrt(4.0 * math.cos(t) ** 2 + math.sin(t) ** 2)


def curvature(x0: float) -> float:
    """Curvature 12 pi^6 x^2 / (16 x^6 + pi^6)^(3/2) of the real blue curve."""
    return 12.0 * PI6 * x0 * x0 / (16.0 * x0 ** 6 + PI6) ** 1.5


def curvature_argmax() -> float:
    """Abscissa of maximal curvature on x > 0: pi / 56^(1/6)."""
    return math.pi / 56.0 ** (1.0 / 6.0)


@dataclass(frozen=True)
class OsculatingCircle:
    center_x: float
    center_y: float
    radius: float
    at_x0: float

    def __post_init__(self):
        if not self.radius > 0.0:
            raise ValueError("radius must be positive")


def osculating_circle(x0: float) -> OsculatingCircle:
    """Osculating circle of the blue curve at x0 (closed form).

    center = (2 x0 (pi^6 - 8 x0^6) / (3 pi^6),
              12.511 - (7/(3 pi^3)) x0^4 - (pi^3/12) / x0^2)
    radius = (16 x0^6 + pi^6)^(3/2) / (12 pi^6 x0^2)
    """
    if x0 == 0.0:
        raise InfiniteRadius("curvature vanishes at x0 = 0")
    cx = 2.0 * x0 * (PI6 - 8.0 * x0 ** 6) / (3.0 * PI6)
    cy = (BLUE_LEVEL - CENTER_QUARTIC_COEFF * x0 ** 4
          - CENTER_INVSQ_COEFF / (x0 * x0))
    radius = (16.0 * x0 ** 6 + PI6) ** 1.5 / (12.0 * PI6 * x0 * x0)
    return OsculatingCircle(cx, cy, radius, x0)


def geodesic_residual(x: float, y: float, x0: float) -> float:
    """(y - yc)^2 + (x - xc)^2 - R^2 against the osculating circle at x0.

    The printed form of this equation drops the square on its x term; it is
    restored here, which is the only reading whose right-hand side
    (pi^6 + 16 x0^6)^3 / (144 pi^12 x0^4) equals the squared radius.
    """
    circ = osculating_circle(x0)
    rhs = (PI6 + 16.0 * x0 ** 6) ** 3 / (144.0 * PI12 * x0 ** 4)
    assert abs(rhs - circ.radius ** 2) <= 1e-10 * rhs
    return (y - circ.center_y) ** 2 + (x - circ.center_x) ** 2 - rhs


def geodesic_integrand(x: float) -> float:
    """Arc-length integrand of the geodesic quantity; behaves as 48|x|/pi^12
    near zero and decays like x^-17."""
    x2 = x * x
    x6 = x2 * x2 * x2
    x12 = x6 * x6
    num = x2 * (32.0 * PI6 * x6 * (x2 - 32.0) + PI12 * (4.0 + x2)
                + 256.0 * x12 * (256.0 + x2))
    den = (PI6 + 16.0 * x6) ** 8
    ratio = num / den
    if ratio < 0.0:
        raise NumericalDomain(f"negative radicand at x = {x!r}")
    return 24.0 * PI6 * math.sqrt(ratio)


def parent_x(x: complex) -> complex:
    """Parent function X: e^{-ix} - 2i, period 2 pi along the real axis."""
    return cmath.exp(-1j * x) - 2j


def parent_x_root(n: int) -> complex:
    """n-th root of X: 2 pi n - pi/2 + i ln 2."""
    return 2.0 * math.pi * n - math.pi / 2.0 + 1j * math.log(2.0)


def parent_y(y: complex) -> complex:
    """Parent function Y: 2 e^{-y pi i}; |Y| = 2 on the reals, so no roots."""
    return 2.0 * cmath.exp(-1j * math.pi * y)


class ParentAxis(enum.Enum):
    X = "x"
    Y = "y"


# the series pair is tied to a symbolic "universal constant" that the
# construction treats as unbounded; kept as a documented flag, not a number
UNIVERSAL_CONSTANT_UNBOUNDED = True


@dataclass(frozen=True)
class ParentSample:
    """One sampled parent-function value; X repeats with period 2 pi in its
    argument, Y with period 2."""

    axis: ParentAxis
    argument: float
    value: complex

    @classmethod
    def sample(cls, axis: ParentAxis, argument: float) -> "ParentSample":
        fn = parent_x if axis is ParentAxis.X else parent_y
        return cls(axis, float(argument), fn(float(argument)))


def system_residual(x: float, y: float, z: float, theta: float) -> float:
    """Reduced parametric system 2 sin(theta) + x + 12.511 y - 2z^4/pi^3 - 4z^3/pi^3.

    Vanishes at the root family (0, 0, 0, theta = pi n).
    """
    return (gaussian_expr(theta) + x + BLUE_LEVEL * y
            - 2.0 * z ** 4 / PI3 - 4.0 * z ** 3 / PI3)


def nonparametric_average(x: float, y: float, z: float) -> float:
    """Quarter average of the non-parametric system with the printed
    coefficients 0.0645 (= 2/pi^3) and 0.129 (= 4/pi^3)."""
    return 0.25 * (x + BLUE_LEVEL * y - 0.0645 * z ** 4 - 0.129 * z ** 3)


def alt_expression(n: float, x: float) -> float:
    """Companion form 12.511 - n^4 x / pi^3; equals blue(z) when n^4 x = z^4."""
    return BLUE_LEVEL - n ** 4 * x / PI3


def blue_quartic_discriminant() -> float:
    """Discriminant of the blue quartic -z^4/pi^3 + 12.511.

    For a*z^4 + e the discriminant is 256 a^3 e^3 = -256 * 12.511^3 / pi^9,
    about -16.8177 (the leading coefficient is negative).
    """
    a = -1.0 / PI3
    return 256.0 * a ** 3 * BLUE_LEVEL ** 3


def blue_root_newton(start: float = 4.0, iterations: int = 60) -> float:
    """Newton iteration on the real blue curve, using red as its derivative."""
    x = start
    for _ in range(iterations):
        fx = onion_eval(OnionColor.BLUE, x).real
        dfx = onion_eval(OnionColor.RED, x).real
        if dfx == 0.0:
            break
        step = fx / dfx
        x -= step
        if abs(step) < 1e-15:
            break
    return x
