"""Pseudohyperbolic geometry of the open unit disk.

Points, finite point sequences with multiplicities, the disk automorphisms
``(c - z) / (1 - conj(c) z)``, the metric ``|(z - w) / (1 - conj(w) z)|``,
and small grid helpers.  Everything here is immutable after construction
and every operation is a pure function.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

# Below this gap double precision loses all accuracy in 1 - conj(w)z, so
# construction rejects such points instead of propagating garbage.
BOUNDARY_FLOOR = 1e-14


class InvariantViolation(ValueError):
    """A domain invariant was broken (point outside disk, duplicate entry, ...)."""


def _tocomplex(z) -> complex:
    """Accept DiskPoint, complex or real and return a plain complex number."""
    if isinstance(z, DiskPoint):
        return z.z
    return complex(z)


@dataclass(frozen=True)
class DiskPoint:
    """A point of the open unit disk, kept strictly inside the conditioning floor."""

    re: float
    im: float

    def __post_init__(self):
        if not (np.isfinite(self.re) and np.isfinite(self.im)):
            raise InvariantViolation("disk point coordinates must be finite")
        if abs(self.z) >= 1.0 - BOUNDARY_FLOOR:
            raise InvariantViolation(
                f"point {self.re}+{self.im}j too close to the unit circle "
                f"(need 1 - |z| >= {BOUNDARY_FLOOR})"
            )

    @property
    def z(self) -> complex:
        return complex(self.re, self.im)

    @classmethod
    def from_complex(cls, z) -> "DiskPoint":
        z = complex(z)
        return cls(z.real, z.imag)

    def __abs__(self) -> float:
        return abs(self.z)


@dataclass(frozen=True)
class FiniteSequence:
    """A finite list of distinct disk points with positive multiplicities.

    Repetition is expressed only through ``multiplicities``; two listed
    entries are never equal as complex numbers.
    """

    points: tuple = field(default_factory=tuple)
    multiplicities: tuple = field(default_factory=tuple)

    def __post_init__(self):
        pts = tuple(
            p if isinstance(p, DiskPoint) else DiskPoint.from_complex(p)
            for p in self.points
        )
        mults = tuple(self.multiplicities) if self.multiplicities else (1,) * len(pts)
        object.__setattr__(self, "points", pts)
        object.__setattr__(self, "multiplicities", mults)
        if len(mults) != len(pts):
            raise InvariantViolation("multiplicities must parallel points")
        for m in mults:
            if not isinstance(m, (int, np.integer)) or m < 1:
                raise InvariantViolation(f"multiplicity {m!r} is not a positive integer")
        zs = [p.z for p in pts]
        if len(set(zs)) != len(zs):
            raise InvariantViolation("duplicate points; use multiplicities for repetition")

    @classmethod
    def from_complex(cls, values, multiplicities=None) -> "FiniteSequence":
        pts = tuple(DiskPoint.from_complex(v) for v in values)
        mults = tuple(int(m) for m in multiplicities) if multiplicities is not None else None
        return cls(pts, mults if mults is not None else ())

    @property
    def zs(self) -> np.ndarray:
        """Listed points as a complex array (no multiplicity expansion)."""
        return np.array([p.z for p in self.points], dtype=complex)

    @property
    def mults(self) -> np.ndarray:
        return np.array(self.multiplicities, dtype=int)

    @property
    def total_count(self) -> int:
        """Number of points counted with multiplicity."""
        return int(sum(self.multiplicities))

    def expanded(self) -> np.ndarray:
        """Points repeated according to multiplicity."""
        if not self.points:
            return np.zeros(0, dtype=complex)
        return np.repeat(self.zs, self.mults)

    def is_simple(self) -> bool:
        return all(m == 1 for m in self.multiplicities)

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self):
        return iter(self.points)


@dataclass(frozen=True)
class MoebiusMap:
    """The involutive disk automorphism ``z -> (c - z) / (1 - conj(c) z)``.

    It swaps 0 and its center c, and applying it twice is the identity.
    """

    center: DiskPoint

    def __post_init__(self):
        if not isinstance(self.center, DiskPoint):
            object.__setattr__(self, "center", DiskPoint.from_complex(self.center))

    def __call__(self, z):
        """Apply the map; accepts scalars or complex arrays, returns the same."""
        c = self.center.z
        if isinstance(z, np.ndarray):
            return (c - z) / (1.0 - np.conj(c) * z)
        w = _tocomplex(z)
        return (c - w) / (1.0 - c.conjugate() * w)

    def jacobian(self, w) -> float:
        """Area-distortion factor |d(map)/dz|^2 = (1-|c|^2)^2 / |1 - conj(c) w|^4 at w."""
        c = self.center.z
        if isinstance(w, np.ndarray):
            return (1.0 - abs(c) ** 2) ** 2 / np.abs(1.0 - np.conj(c) * w) ** 4
        v = _tocomplex(w)
        return (1.0 - abs(c) ** 2) ** 2 / abs(1.0 - c.conjugate() * v) ** 4


def psh_distance(z, w) -> float:
    """Pseudohyperbolic distance |(z - w) / (1 - conj(w) z)| in [0, 1)."""
    a = _tocomplex(z)
    b = _tocomplex(w)
    return abs((a - b) / (1.0 - b.conjugate() * a))


def psh_distance_pairwise(zs: np.ndarray, ws: np.ndarray) -> np.ndarray:
    """Matrix of distances between two complex arrays (rows: zs, cols: ws)."""
    a = np.asarray(zs, dtype=complex)[:, None]
    b = np.asarray(ws, dtype=complex)[None, :]
    return np.abs((a - b) / (1.0 - np.conj(b) * a))


def moebius_apply(m: MoebiusMap, z) -> DiskPoint:
    """Apply a Moebius map and wrap the image as a validated disk point."""
    return DiskPoint.from_complex(m(z))


def moebius_jacobian(m: MoebiusMap, w) -> float:
    return m.jacobian(w)


def psh_diameter(s: FiniteSequence) -> float:
    """Largest pairwise distance among the listed points; 0 for singletons."""
    if len(s) == 0:
        raise InvariantViolation("empty set")
    if len(s) == 1:
        return 0.0
    d = psh_distance_pairwise(s.zs, s.zs)
    return float(d.max())


def hyperbolic_grid(r_max: float, pitch: float, max_points: int = 20000) -> np.ndarray:
    """Centers covering |z| <= r_max with pseudohyperbolic pitch about ``pitch``.

    Rings advance by the metric's addition law r' = (r + pitch)/(1 + r*pitch)
    and each ring carries enough angles that neighbours stay within one pitch.
    """
    if not 0 < pitch < 1:
        raise ValueError("pitch must lie in (0, 1)")
    centers = [0.0 + 0.0j]
    r = 0.0
    while True:
        r = (r + pitch) / (1.0 + r * pitch)
        if r > r_max:
            break
        n_theta = max(6, int(np.ceil(2.0 * np.pi * r / ((1.0 - r * r) * pitch))))
        if len(centers) + n_theta > max_points:
            n_theta = max_points - len(centers)
            if n_theta <= 0:
                break
        theta = 2.0 * np.pi * np.arange(n_theta) / n_theta
        centers.extend(r * np.exp(1j * theta))
        if len(centers) >= max_points:
            break
    return np.array(centers, dtype=complex)
