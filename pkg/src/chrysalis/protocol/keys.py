"""Key material: the seven-step key generation and the TOP/BLIP/TAP trio.

The construction here is a versioned interpretation (params_version 1) of
the handshake's named objects:

* TOP  - the public vector field: the blue-onion surface gradient sampled
         on a fixed 8x8 grid, rotated by the private angle sum and
         attenuated by the lattice error term.
* BLIP - the compact public key: antipode points, the projected plane
         image, the noised lattice point g = s + E(r), and the H-clique
         digest.
* TAP  - private extraction: the owner re-derives the blip from the secret
         angle and error radius, checks digests, and unrolls the keystream.

No security claim is made anywhere in this package; determinism and
round-trip correctness are the only contracts.
"""

from __future__ import annotations

import hashlib
import math
import struct
from dataclasses import dataclass

import numpy as np

from ..bmi import projection_from_basis
from ..errors import TamperDetected, VersionMismatch
from ..lattice import GaussianInt, count_lattice_points
from ..onions import parent_x, parent_y
from ..sphere import SpherePoint, project_to_plane
from .graphs import HClique, Rack, pen, rack_default
from .prng import SplitMix64

PARAMS_VERSION = 1
ANGLE_SUM_CAP_DEG = 179.21
GRID_SIDE = 8
# grid abscissae -3..4 so the anchor zero (0, 0) is a sample point
GRID_OFFSET = -3
_PI3 = math.pi ** 3
_QUANT_SCALE = 1e4


@dataclass(frozen=True)
class PrivateAngle:
    """Secret angles in degrees; each in (0, 180), sum capped at 179.21."""

    omega_deg: tuple[float, ...]

    def __post_init__(self):
        if not self.omega_deg:
            raise ValueError("need at least one angle component")
        for w in self.omega_deg:
            if not 0.0 < w < 180.0:
                raise ValueError("components must lie in (0, 180) degrees")
        if sum(self.omega_deg) > ANGLE_SUM_CAP_DEG:
            raise ValueError(f"angle sum exceeds {ANGLE_SUM_CAP_DEG} degrees")

    @property
    def total_radians(self) -> float:
        return math.radians(sum(self.omega_deg))


@dataclass(frozen=True)
class PrivateKey:
    omega: PrivateAngle
    s: GaussianInt
    pen_seed: int
    hclique: HClique
    seed: int
    error_radius: int
    antipodes: tuple[SpherePoint, SpherePoint, SpherePoint]
    projected: complex
    x_samples: tuple[complex, ...]
    y_samples: tuple[complex, ...]
    point_tags: tuple[tuple[bool, int, str], ...]  # (orientation, spin, color)
    params_version: int = PARAMS_VERSION


@dataclass(frozen=True)
class Blip:
    antipodes: tuple[SpherePoint, SpherePoint, SpherePoint]
    projected: complex
    g: GaussianInt
    hclique_digest: bytes
    params_version: int = PARAMS_VERSION

    def serialize(self) -> bytes:
        out = [struct.pack(">I", self.params_version)]
        for p in self.antipodes:
            out.append(struct.pack(">ddd", p.xi, p.eta, p.zeta))
        out.append(struct.pack(">dd", self.projected.real,
                               self.projected.imag))
        out.append(struct.pack(">qq", self.g.a, self.g.b))
        out.append(self.hclique_digest)
        return b"".join(out)

    @classmethod
    def parse(cls, data: bytes) -> "Blip":
        (version,) = struct.unpack(">I", data[:4])
        pos = 4
        pts = []
        for _ in range(3):
            xi, eta, zeta = struct.unpack(">ddd", data[pos:pos + 24])
            pts.append(SpherePoint(xi, eta, zeta))
            pos += 24
        re, im = struct.unpack(">dd", data[pos:pos + 16])
        pos += 16
        ga, gb = struct.unpack(">qq", data[pos:pos + 16])
        pos += 16
        digest = data[pos:pos + 32]
        if len(digest) != 32:
            raise ValueError("truncated blip")
        return cls((pts[0], pts[1], pts[2]), complex(re, im),
                   GaussianInt(ga, gb), digest, version)


@dataclass(frozen=True)
class Top:
    """Public vector field: blip data plus the 8x8 grid samples."""

    grid: tuple[tuple[complex, ...], ...]
    antipodes: tuple[SpherePoint, SpherePoint, SpherePoint]
    projected: complex
    g: GaussianInt
    hclique_digest: bytes
    params_version: int = PARAMS_VERSION

    def serialize(self) -> bytes:
        out = [struct.pack(">I", self.params_version)]
        for row in self.grid:
            for z in row:
                out.append(struct.pack(">dd", z.real, z.imag))
        out.append(make_blip(self).serialize())
        return b"".join(out)


@dataclass(frozen=True)
class KeyPair:
    private: PrivateKey
    public: Blip


def _round_half_away(x: float) -> int:
    return int(math.floor(x + 0.5)) if x >= 0 else -int(math.floor(0.5 - x))


def _unit_normal(rng: SplitMix64) -> tuple[float, float, float]:
    z = 2.0 * rng.uniform() - 1.0
    phi = 2.0 * math.pi * rng.uniform()
    s = math.sqrt(max(0.0, 1.0 - z * z))
    return (s * math.cos(phi), s * math.sin(phi), z)


def _plane_basis(n: tuple[float, float, float]):
    helper = (1.0, 0.0, 0.0) if abs(n[0]) < 0.9 else (0.0, 1.0, 0.0)
    d = sum(h * c for h, c in zip(helper, n))
    e1 = tuple(h - d * c for h, c in zip(helper, n))
    norm = math.sqrt(sum(c * c for c in e1))
    e1 = tuple(c / norm for c in e1)
    e2 = (n[1] * e1[2] - n[2] * e1[1],
          n[2] * e1[0] - n[0] * e1[2],
          n[0] * e1[1] - n[1] * e1[0])
    return e1, e2


def _draw_angles(rng: SplitMix64) -> PrivateAngle:
    while True:
        total = ANGLE_SUM_CAP_DEG * rng.uniform()
        c1, c2 = sorted((rng.uniform(), rng.uniform()))
        parts = (total * c1, total * (c2 - c1), total * (1.0 - c2))
        if all(0.0 < p < 180.0 for p in parts):
            return PrivateAngle(parts)


def keygen(params_version: int = PARAMS_VERSION, seed: int = 0) -> KeyPair:
    """Deterministic seven-step key generation.

    1. a plane through the origin and three distinct points on its great
       circle; 2. series samples from the parent functions; 3. orientation
    tags per onion; 4. the private angle; 5. antipodes and the orthogonal
    plane projection; 6. the quantized secret s and the noised public
    g = s + E(r); 7. the keystream binding through the blip digest.
    """
    if params_version != PARAMS_VERSION:
        raise VersionMismatch(f"unknown params version {params_version}")
    rng = SplitMix64(seed)

    # step 1: plane and points on its great circle
    normal = _unit_normal(rng)
    e1, e2 = _plane_basis(normal)
    points: list[SpherePoint] = []
    angles: list[float] = []
    while len(points) < 3:
        t = 2.0 * math.pi * rng.uniform()
        p = SpherePoint(*(math.cos(t) * a + math.sin(t) * b
                          for a, b in zip(e1, e2)))
        if p.zeta < -0.999:
            continue  # keep the plane image finite
        if any(abs(prev - t) < 1e-9 for prev in angles):
            continue
        angles.append(t)
        points.append(p)

    # step 2: parent-series samples (the pen step below draws its own)
    x_samples = tuple(parent_x(rng.uniform() * 2.0 * math.pi)
                      for _ in range(3))
    y_samples = tuple(parent_y(rng.uniform() * 2.0) for _ in range(3))

    # steps 2-3: rack, pen and the per-onion orientation/spin/color tags
    rack = rack_default(rng.next_u64())
    pen_seed = rng.next_u64()
    hclique = pen(rack, extra_nodes=rng.randrange(6), seed=pen_seed)
    point_tags = tuple((rng.bernoulli(), spin, onion.value)
                       for spin, onion in enumerate(rack.onions, start=1))

    # step 4: private angle
    omega = _draw_angles(rng)

    # step 5: antipodes and orthogonal projections onto the plane
    antipodes = tuple(p.negated() for p in points)
    proj = projection_from_basis([np.asarray(e1), np.asarray(e2)])
    for p in points:
        v = np.array([p.xi, p.eta, p.zeta])
        assert np.allclose(proj @ v, v, atol=1e-9)  # points lie on the plane
    plane_image = project_to_plane(points[0])
    projected = complex(plane_image.re, plane_image.im)

    # step 6: quantized secret plus the lattice error term
    r = 10 + (seed % 91)
    err = count_lattice_points(float(r)).error
    rotated = _QUANT_SCALE * projected * complex(math.cos(omega.total_radians),
                                                 math.sin(omega.total_radians))
    s = GaussianInt(_round_half_away(rotated.real),
                    _round_half_away(rotated.imag))
    g = s + GaussianInt(_round_half_away(err), 0)

    private = PrivateKey(omega, s, pen_seed, hclique, seed, r,
                         antipodes, projected, x_samples, y_samples,
                         point_tags, params_version)
    blip = make_blip(derive_top_from_private(private, g))
    return KeyPair(private, blip)


def _grid_values(omega_rad: float, err: float) -> tuple[tuple[complex, ...], ...]:
    rot = complex(math.cos(omega_rad), math.sin(omega_rad))
    att = math.exp(-abs(err) / 100.0)
    rows = []
    for u in range(GRID_SIDE):
        row = []
        for v in range(GRID_SIDE):
            x = float(u + GRID_OFFSET)
            y = float(v + GRID_OFFSET)
            grad = -4.0 * (x * x + y * y) * complex(x, y) / _PI3
            row.append(rot * att * grad)
        rows.append(tuple(row))
    return tuple(rows)


def derive_top_from_private(private: PrivateKey, g: GaussianInt) -> Top:
    err = count_lattice_points(float(private.error_radius)).error
    grid = _grid_values(private.omega.total_radians, err)
    return Top(grid, private.antipodes, private.projected, g,
               private.hclique.digest(), private.params_version)


def derive_top(kp: KeyPair) -> Top:
    """Recompute the public vector field from the private key."""
    return derive_top_from_private(kp.private, kp.public.g)


def make_blip(top: Top) -> Blip:
    return Blip(top.antipodes, top.projected, top.g, top.hclique_digest,
                top.params_version)


# -- keystream encode / extract -----------------------------------------------

def _stream_key(blip: Blip) -> bytes:
    return hashlib.sha256(b"chrysalis-keystream-v1" + blip.serialize()).digest()


def _keystream(key: bytes, n: int) -> bytes:
    out = bytearray()
    counter = 0
    while len(out) < n:
        out.extend(hashlib.sha256(key + struct.pack(">Q", counter)).digest())
        counter += 1
    return bytes(out[:n])


def encode(blip: Blip, message: bytes) -> bytes:
    """Bind a message to the public blip: confirm tag plus keystream body."""
    key = _stream_key(blip)
    body = bytes(a ^ b for a, b in zip(message, _keystream(key, len(message))))
    tag = hashlib.sha256(b"chrysalis-confirm" + key + message).digest()
    return tag + body


def tap(kp: KeyPair, blip: Blip, ciphertext: bytes) -> bytes:
    """Extract a message using the private key.

    The owner re-derives the blip from the private angle and error radius;
    digest or version mismatches and tag failures raise.
    """
    if blip.params_version != kp.private.params_version:
        raise VersionMismatch(f"blip params version {blip.params_version}")
    if blip.hclique_digest != kp.private.hclique.digest():
        raise TamperDetected("H-clique digest mismatch")
    rebuilt = make_blip(derive_top(kp))
    if rebuilt.serialize() != blip.serialize():
        raise TamperDetected("blip does not match the private key")
    if len(ciphertext) < 32:
        raise TamperDetected("ciphertext shorter than its tag")
    tag, body = ciphertext[:32], ciphertext[32:]
    key = _stream_key(rebuilt)
    message = bytes(a ^ b for a, b in zip(body, _keystream(key, len(body))))
    expect = hashlib.sha256(b"chrysalis-confirm" + key + message).digest()
    if tag != expect:
        raise TamperDetected("confirm tag mismatch")
    return message


# -- keyspace counting ---------------------------------------------------------

@dataclass(frozen=True)
class KeyspaceCounts:
    """Permutation counts of the default rack's label space."""

    four_of_base: int       # 216 * 215 * 214 * 213
    eight_element: int      # 8!
    six_element: int        # 6!

    def functional_value(self, theta: float) -> float:
        """The permutation count scaled by sin(theta)."""
        return self.four_of_base * math.sin(theta)


def keyspace_counts() -> KeyspaceCounts:
    base = 6 ** 3
    four = base * (base - 1) * (base - 2) * (base - 3)
    return KeyspaceCounts(four, math.factorial(8), math.factorial(6))
