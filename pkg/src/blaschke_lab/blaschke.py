"""Finite Blaschke products and separation diagnostics.

A finite Blaschke product is the bounded analytic function

    B(z) = z^m * prod_k (conj(a_k)/|a_k|) (a_k - z) / (1 - conj(a_k) z)

over the nonzero points a_k of its zero sequence, with m the multiplicity
of 0.  This module evaluates B and its derivative, forms deleted products,
measures separation constants, counts zeros in metric disks, partitions
sequences into separated pieces, and probes compositions with disk
automorphisms.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .disk import (
    DiskPoint,
    FiniteSequence,
    InvariantViolation,
    MoebiusMap,
    _tocomplex,
    psh_distance,
    psh_distance_pairwise,
)


@dataclass(frozen=True)
class BlaschkeProduct:
    """Finite Blaschke product determined by a zero sequence with multiplicities."""

    zeros: FiniteSequence

    @classmethod
    def from_complex(cls, values, multiplicities=None) -> "BlaschkeProduct":
        return cls(FiniteSequence.from_complex(values, multiplicities))

    @property
    def degree(self) -> int:
        return self.zeros.total_count


@dataclass(frozen=True)
class SeparationReport:
    """Separation constants of a zero sequence.

    delta        min over j of |B_j(z_j)| (deleted products)
    delta_prime  min over j of (1 - |z_j|^2) |B'(z_j)|
    discreteness min pairwise pseudohyperbolic distance (0 with repeated points)
    per_point    the individual |B_j(z_j)| values
    """

    delta: float
    delta_prime: float
    discreteness: float
    per_point: np.ndarray


def _factor_values(b: BlaschkeProduct, z):
    """Per-listed-zero factor values at z (unimodular normalizer included).

    Returns an array of shape (n_zeros,) + shape(z); multiplicities are NOT
    applied here.
    """
    zs = b.zeros.zs
    z = np.asarray(z, dtype=complex)
    out = np.empty((len(zs),) + z.shape, dtype=complex)
    for i, a in enumerate(zs):
        if a == 0:
            out[i] = z
        else:
            out[i] = (a.conjugate() / abs(a)) * (a - z) / (1.0 - a.conjugate() * z)
    return out


def evaluate(b: BlaschkeProduct, z):
    """Value of the product at z; scalars map to complex, arrays to arrays."""
    scalar = not isinstance(z, np.ndarray)
    w = np.asarray(_tocomplex(z) if scalar else z, dtype=complex)
    if len(b.zeros) == 0:
        res = np.ones_like(w)
    else:
        factors = _factor_values(b, w)
        mults = b.zeros.mults
        res = np.ones_like(w)
        for i in range(len(mults)):
            res = res * factors[i] ** mults[i]
    return complex(res) if scalar else res


def log_abs_evaluate(b: BlaschkeProduct, z):
    """sum of mult * log|factor|; -inf at zeros.  Stable for long products."""
    scalar = not isinstance(z, np.ndarray)
    w = np.asarray(_tocomplex(z) if scalar else z, dtype=complex)
    if len(b.zeros) == 0:
        res = np.zeros(w.shape)
    else:
        factors = np.abs(_factor_values(b, w))
        with np.errstate(divide="ignore"):
            res = (b.zeros.mults[(...,) + (None,) * w.ndim] * np.log(factors)).sum(axis=0)
    return float(res) if scalar else res


def deleted_product(b: BlaschkeProduct, j: int) -> complex:
    """B_j(z_j): the product over all other zeros, evaluated at zero j.

    Returns 0 when zero j is repeated, 1 for a lone zero (empty product).
    """
    n = len(b.zeros)
    if not 0 <= j < n:
        raise IndexError(f"zero index {j} out of range for {n} listed zeros")
    if b.zeros.multiplicities[j] > 1:
        return 0.0 + 0.0j
    zj = b.zeros.points[j].z
    value = 1.0 + 0.0j
    for k, a in enumerate(b.zeros.zs):
        if k == j:
            continue
        if a == 0:
            f = zj
        else:
            f = (a.conjugate() / abs(a)) * (a - zj) / (1.0 - a.conjugate() * zj)
        value *= f ** b.zeros.multiplicities[k]
    return value


def derivative(b: BlaschkeProduct, z) -> complex:
    """Analytic derivative B'(z).

    Off the zero set this is B(z) times the logarithmic derivative; at a
    simple zero the product rule leaves the deleted product times the own
    factor's derivative; at a multiple zero the derivative is exactly 0.
    """
    w = _tocomplex(z)
    zs = b.zeros.zs
    mults = b.zeros.mults
    hit = np.nonzero(zs == w)[0]
    if hit.size:
        j = int(hit[0])
        if mults[j] > 1:
            return 0.0 + 0.0j
        rest = deleted_product(b, j)
        a = zs[j]
        if a == 0:
            own = 1.0 + 0.0j
        else:
            own = (a.conjugate() / abs(a)) * (-1.0) / (1.0 - abs(a) ** 2)
        return rest * own
    value = evaluate(b, w)
    logd = 0.0 + 0.0j
    for a, m in zip(zs, mults):
        if a == 0:
            logd += m / w
        else:
            logd += m * (abs(a) ** 2 - 1.0) / ((1.0 - a.conjugate() * w) * (a - w))
    return value * logd


def separation_report(b: BlaschkeProduct) -> SeparationReport:
    """Compute all separation constants of the zero sequence."""
    n = len(b.zeros)
    if n == 0:
        raise InvariantViolation("separation report needs a nonempty sequence")
    per_point = np.array([abs(deleted_product(b, j)) for j in range(n)])
    delta = float(per_point.min())
    dprime = min(
        (1.0 - abs(p.z) ** 2) * abs(derivative(b, p.z)) for p in b.zeros.points
    )
    if not b.zeros.is_simple():
        discreteness = 0.0
    elif n == 1:
        discreteness = 1.0
    else:
        d = psh_distance_pairwise(b.zeros.zs, b.zeros.zs)
        discreteness = float(d[~np.eye(n, dtype=bool)].min())
    return SeparationReport(delta, float(dprime), discreteness, per_point)


def local_zero_count(b: BlaschkeProduct, center, r: float) -> int:
    """Zeros (with multiplicity) at pseudohyperbolic distance < r from center."""
    if not 0 < r < 1:
        raise ValueError("radius must lie in (0, 1)")
    if len(b.zeros) == 0:
        return 0
    c = _tocomplex(center)
    d = np.abs((b.zeros.zs - c) / (1.0 - np.conj(c) * b.zeros.zs))
    return int(b.zeros.mults[d < r].sum())


def max_local_count(b: BlaschkeProduct, r: float, extra_centers=()) -> int:
    """Max of local_zero_count over the zeros themselves plus optional centers.

    Searching centers in the zero set is a certified lower bound for the
    supremum over the whole disk: a disk D(c, r) holding k zeros contains a
    zero z* whose doubled disk D(z*, 2r/(1+r^2)) holds the same k.  Pass a
    fine grid through ``extra_centers`` to tighten the search.
    """
    if not 0 < r < 1:
        raise ValueError("radius must lie in (0, 1)")
    centers = list(b.zeros.zs) + [_tocomplex(c) for c in extra_centers]
    if not centers:
        return 0
    return max(local_zero_count(b, c, r) for c in centers)


def partition_separated(s: FiniteSequence, sep: float):
    """Split a simple sequence into parts with pairwise distance > sep each.

    Greedy first fit over points sorted by increasing modulus: each point
    joins the first part all of whose members are farther than sep, else
    opens a new part.  Deterministic; the part count is bounded by the max
    local zero count at radius sep.
    """
    if not 0 < sep < 1:
        raise ValueError("separation must lie in (0, 1)")
    if not s.is_simple():
        raise InvariantViolation("inseparable multiplicity")
    order = sorted(range(len(s)), key=lambda i: (abs(s.points[i].z), np.angle(s.points[i].z)))
    parts: list[list[int]] = []
    for i in order:
        zi = s.points[i].z
        placed = False
        for part in parts:
            if all(psh_distance(zi, s.points[j].z) > sep for j in part):
                part.append(i)
                placed = True
                break
        if not placed:
            parts.append([i])
    return [
        FiniteSequence(tuple(s.points[i] for i in part), (1,) * len(part))
        for part in parts
    ]


def compose_min_on_compact(
    b: BlaschkeProduct, center, rho: float, grid: int = 512
) -> float:
    """Size of B composed with the automorphism swapping 0 and center,
    measured as the max of |B(phi_center(z))| over a grid on |z| <= rho.

    The modulus of an analytic function peaks on the bounding circle, so the
    grid samples |z| = rho.  A small value certifies that this composition
    is nearly 0 on the compact set, the failure mode of the 'uniformly
    nonzero' property.
    """
    if not 0 < rho < 1:
        raise ValueError("rho must lie in (0, 1)")
    if grid < 8:
        raise ValueError("need at least 8 grid samples")
    phi = MoebiusMap(center if isinstance(center, DiskPoint) else DiskPoint.from_complex(center))
    theta = 2.0 * np.pi * np.arange(grid) / grid
    circle = rho * np.exp(1j * theta)
    vals = log_abs_evaluate(b, phi(circle))
    return float(np.exp(vals.max()))
