"""Hardy and Bergman norms by quadrature, and division/multiplication probes.

Area integrals over the disk run on a tensor grid whose rings refine
geometrically toward the boundary; ring bands tile the disk exactly so
the weights sum to pi to machine precision.  Circle means use uniform
angular sampling, which for analytic integrands converges spectrally.

The probes implemented here measure two operator-theoretic quantities for
a finite Blaschke product B:

* universal_divisor_ratio - how much dividing by B can inflate a weighted
  Bergman norm, over a family of functions vanishing on the zeros of B;
* mb_lower_probe - the empirical constant c in ||Bf|| >= c ||f||, probed
  along f with |f|^p equal to the area-distortion of a disk automorphism,
  for which ||f||_Ap^p = pi exactly.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .blaschke import BlaschkeProduct, evaluate, log_abs_evaluate
from .disk import MoebiusMap, DiskPoint, FiniteSequence, _tocomplex
from .util import worker_count

DEFAULT_RADII = (0.5, 0.9, 0.99, 0.999, 0.9999, 0.99999)


@dataclass(frozen=True)
class AnalyticFunction:
    """Black-box analytic function on the disk.

    The evaluator must accept complex scalars and numpy arrays of complex
    and be safe for concurrent calls.  When the function was formed as
    (Blaschke product) * (cofactor), keeping those parts lets quotients by
    the product cancel exactly instead of numerically.
    """

    evaluator: object
    label: str = ""
    blaschke_factor: BlaschkeProduct | None = None
    cofactor: "AnalyticFunction | None" = None

    def __call__(self, z):
        if isinstance(z, DiskPoint):
            z = z.z
        return self.evaluator(z)


def analytic(fn, label: str = "") -> AnalyticFunction:
    return AnalyticFunction(fn, label)


def constant_fn(c) -> AnalyticFunction:
    c = complex(c)
    return AnalyticFunction(lambda z: np.full_like(np.asarray(z, dtype=complex), c)
                            if isinstance(z, np.ndarray) else c, f"const {c}")


def poly_from_zeros(zeros, lead=1.0) -> AnalyticFunction:
    """Monic-style polynomial lead * prod (z - a_j)."""
    zs = [complex(a) for a in zeros]
    lead = complex(lead)

    def ev(z):
        out = np.full_like(np.asarray(z, dtype=complex), lead) if isinstance(z, np.ndarray) else lead
        for a in zs:
            out = out * (z - a)
        return out

    return AnalyticFunction(ev, f"poly deg {len(zs)}")


def blaschke_fn(b: BlaschkeProduct) -> AnalyticFunction:
    return AnalyticFunction(lambda z: evaluate(b, z), f"blaschke deg {b.degree}",
                            blaschke_factor=b, cofactor=constant_fn(1.0))


def times_blaschke(g: AnalyticFunction, b: BlaschkeProduct, label: str = "") -> AnalyticFunction:
    """The product B*g, remembering both parts for exact later division."""
    return AnalyticFunction(lambda z: evaluate(b, z) * g(z),
                            label or f"B*{g.label}", blaschke_factor=b, cofactor=g)


def conformal_density(center, power: float) -> AnalyticFunction:
    """Analytic function with modulus |phi_center'|^power.

    Computed as ((1-|c|^2)/(1 - conj(c) z)^2)^power with principal logs;
    1 - conj(c) z has positive real part on the disk so the branch is safe.
    """
    c = _tocomplex(center)
    amp = math.log(1.0 - abs(c) ** 2)

    def ev(z):
        v = 1.0 - np.conj(c) * np.asarray(z, dtype=complex)
        out = np.exp(power * (amp - 2.0 * np.log(v)))
        return out if isinstance(z, np.ndarray) else complex(out)

    return AnalyticFunction(ev, f"|phi'_{c:.3g}|^{power:.3g}")


def divide_by_blaschke(f: AnalyticFunction, b: BlaschkeProduct) -> AnalyticFunction:
    """The quotient f / B.

    Exact (symbolic cancellation) when f was built via times_blaschke or
    blaschke_fn with the same product.  Otherwise the quotient is formed
    numerically; evaluation points that collide with a zero of B are
    nudged by 1e-7, so generic quotients are approximate near zeros.
    """
    if f.blaschke_factor is not None and f.blaschke_factor.zeros == b.zeros:
        return f.cofactor
    zs = b.zeros.zs

    def ev(z):
        arr = isinstance(z, np.ndarray)
        w = np.asarray(z, dtype=complex).copy()
        if len(zs):
            bad = np.min(np.abs(w[..., None] - zs), axis=-1) < 1e-12
            if bad.any():
                w = np.where(bad, w + 1e-7 * np.exp(0.4j), w)
        out = f(w) / evaluate(b, w)
        return out if arr else complex(out)

    return AnalyticFunction(ev, f"({f.label})/B")


@dataclass(frozen=True)
class QuadratureGrid:
    """Disk quadrature: ring radii, exact ring-band areas, angles per ring."""

    radii: np.ndarray
    band_areas: np.ndarray
    angular_counts: np.ndarray

    @classmethod
    def build(cls, rings: int = 400, min_gap: float = 1e-6,
              base_angular: int = 64, max_angular: int = 1 << 14,
              angular_factor: float = 16.0) -> "QuadratureGrid":
        """Band edges geometric in 1-r from 1 down to min_gap, plus the
        final sliver band up to r = 1 so band areas sum to pi exactly.
        Each band carries a two-point Gauss rule in the area variable
        u = r^2 (two rings per band), fourth-order for smooth integrands.
        ``rings`` counts the evaluation rings, two per band."""
        bands = max(1, rings // 2)
        gaps = min_gap ** (np.arange(bands + 1) / bands)  # 1 down to min_gap
        edges = np.concatenate([1.0 - gaps, [1.0]])
        u_lo, u_hi = edges[:-1] ** 2, edges[1:] ** 2
        mid = 0.5 * (u_lo + u_hi)
        half = 0.5 * (u_hi - u_lo)
        shift = half / np.sqrt(3.0)
        radii = np.sqrt(np.concatenate([mid - shift, mid + shift]))
        areas = np.concatenate([np.pi * half, np.pi * half])
        order = np.argsort(radii)
        radii, areas = radii[order], areas[order]
        counts = np.clip(np.ceil(angular_factor / (1.0 - radii)),
                         base_angular, max_angular).astype(int)
        return cls(radii, areas, counts)

    @property
    def total_area(self) -> float:
        return float(self.band_areas.sum())

    def node_count(self) -> int:
        return int(self.angular_counts.sum())


_DEFAULT_GRID: list = []


def default_grid() -> QuadratureGrid:
    if not _DEFAULT_GRID:
        _DEFAULT_GRID.append(QuadratureGrid.build())
    return _DEFAULT_GRID[0]


def area_integral(fn, g: QuadratureGrid | None = None) -> float:
    """Integral over the disk of a real-valued field fn(z_array) -> array.

    Ring sums are accumulated with exact summation, so the result does not
    depend on evaluation order; rings may be processed by worker threads
    (capped by BLASCHKE_LAB_THREADS).
    """
    g = g or default_grid()

    def ring_sum(j: int) -> float:
        n = int(g.angular_counts[j])
        theta = 2.0 * np.pi * (np.arange(n) + 0.5) / n
        nodes = g.radii[j] * np.exp(1j * theta)
        return float(np.sum(fn(nodes))) * g.band_areas[j] / n

    workers = worker_count()
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            sums = list(pool.map(ring_sum, range(len(g.radii))))
    else:
        sums = [ring_sum(j) for j in range(len(g.radii))]
    return math.fsum(sums)


def hp_norm(f: AnalyticFunction, p, radii=DEFAULT_RADII) -> float:
    """Hardy norm: max over the radii of the circle mean M_p(f, r).

    M_p is nondecreasing in r for analytic f, so the largest listed radius
    dominates; keeping the whole list makes growth visible to callers.
    For p = inf the value is the sup over the angular samples.
    """
    if p != np.inf and not p > 0:
        raise ValueError("p must be positive or inf")
    best = 0.0
    for r in radii:
        if not 0 <= r < 1:
            raise ValueError("radii must lie in [0, 1)")
        n = int(np.clip(np.ceil(8.0 / (1.0 - r)), 64, 1 << 14))
        theta = 2.0 * np.pi * np.arange(n) / n
        vals = np.abs(f(r * np.exp(1j * theta)))
        if p == np.inf:
            best = max(best, float(vals.max()))
        else:
            best = max(best, float(np.mean(vals**p) ** (1.0 / p)))
    return best


def ap_norm(f: AnalyticFunction, p: float, alpha: float = 0.0,
            g: QuadratureGrid | None = None) -> float:
    """Weighted Bergman norm (integral of |f|^p (1-|z|^2)^alpha dA)^(1/p)."""
    if not p > 0:
        raise ValueError("p must be positive")
    if not alpha > -1:
        raise ValueError("alpha must exceed -1")
    if alpha == 0.0:
        val = area_integral(lambda z: np.abs(f(z)) ** p, g)
    else:
        val = area_integral(
            lambda z: np.abs(f(z)) ** p * (1.0 - np.abs(z) ** 2) ** alpha, g)
    return val ** (1.0 / p)


def kernel_mass(zeta, g: QuadratureGrid | None = None) -> float:
    """Integral over the disk of the area-distortion kernel of phi_zeta.

    Equals pi for every center by change of variables; the quadrature value
    certifies grid accuracy.
    """
    phi = MoebiusMap(DiskPoint.from_complex(zeta))
    return area_integral(lambda z: phi.jacobian(z), g)


def jensen_area_residual(f: AnalyticFunction, zeros: FiniteSequence,
                         g: QuadratureGrid | None = None) -> float:
    """Defect of the area Jensen identity for f against a listed zero set.

    Writes log|f| = log|f_reg| + sum mult * log|w - z_j| and integrates the
    regular part only; each singular term integrates in closed form to
    -(1-|z_j|^2)/2 times pi.  Zero when the listed zeros are exactly the
    zero set of f, strictly negative when some zeros are withheld.
    """
    f0 = abs(f(0.0 + 0.0j))
    if f0 == 0.0:
        raise ValueError("shift required: f(0) must be nonzero")
    zs = zeros.zs
    mults = zeros.mults

    def regular_log(z):
        w = z
        if len(zs):
            collide = np.min(np.abs(w[..., None] - zs), axis=-1) < 1e-13
            if collide.any():
                w = np.where(collide, w + 1e-7 * np.exp(0.3j), w)
        out = np.log(np.abs(f(w)))
        for a, m in zip(zs, mults):
            out = out - m * np.log(np.abs(w - a))
        return out

    quad = area_integral(regular_log, g) / np.pi
    lhs = math.log(f0) - float((mults * np.log(np.abs(zs))).sum()) if len(zs) else math.log(f0)
    return lhs - quad


@dataclass(frozen=True)
class DivisionBound:
    holds: bool
    margin: float
    lhs: float
    rhs: float


def pointwise_division_bound(f: AnalyticFunction, b: BlaschkeProduct, zeta,
                             p: float, C: float,
                             g: QuadratureGrid | None = None) -> DivisionBound:
    """Check |f(zeta)/B(zeta)|^(p/2) <= (e^(C p/2)/pi) * integral of
    |f|^(p/2) times the area-distortion kernel of phi_zeta.

    C should dominate the transformed zero-mass sums of b's zero sequence
    (the uniform Blaschke supremum).  The quotient at zeta cancels exactly
    when f carries b as a stored factor.
    """
    if not p > 0:
        raise ValueError("p must be positive")
    q = divide_by_blaschke(f, b)
    lhs = abs(q(_tocomplex(zeta))) ** (p / 2.0)
    phi = MoebiusMap(DiskPoint.from_complex(zeta))
    integral = area_integral(lambda z: np.abs(f(z)) ** (p / 2.0) * phi.jacobian(z), g)
    rhs = math.exp(C * p / 2.0) / np.pi * integral
    margin = rhs - lhs
    return DivisionBound(lhs <= rhs * (1.0 + 1e-12) + 1e-300, margin, lhs, rhs)


def universal_divisor_ratio(b: BlaschkeProduct, family, p: float,
                            alpha: float = 0.0,
                            g: QuadratureGrid | None = None) -> float:
    """Max over the family of ||f/B|| / ||f|| in the weighted Bergman norm.

    Family members must vanish on the zeros of b with multiplicity; build
    them with times_blaschke so the quotient cancels exactly.
    """
    best = 0.0
    for f in family:
        quot = divide_by_blaschke(f, b)
        best = max(best, ap_norm(quot, p, alpha, g) / ap_norm(f, p, alpha, g))
    return best


def mb_lower_probe(b: BlaschkeProduct, centers, p: float,
                   g: QuadratureGrid | None = None) -> float:
    """Empirical lower constant of multiplication by B on the Bergman space.

    For each center c the test function has |f|^p equal to the kernel of
    phi_c, whose norm is pi^(1/p) exactly; then ||Bf||/||f|| equals
    (integral of |B(phi_c(z))|^p dA / pi)^(1/p) after a change of
    variables.  Returns the min over the centers; 1 for an empty product.
    """
    if not p > 0:
        raise ValueError("p must be positive")
    if len(b.zeros) == 0:
        return 1.0
    best = np.inf
    for c in centers:
        phi = MoebiusMap(DiskPoint.from_complex(_tocomplex(c)))
        val = area_integral(
            lambda z: np.exp(p * log_abs_evaluate(b, phi(z))), g) / np.pi
        best = min(best, val ** (1.0 / p))
    return float(best)


def reproducing_family(s: FiniteSequence, p: float) -> list:
    """Normalized reproducing-kernel style test functions anchored at the
    points of s: f_a(z) = ((1-|a|^2)/(1 - conj(a) z))^(2/p)."""
    fam = []
    for pt in s.points:
        a = pt.z
        amp = math.log(1.0 - abs(a) ** 2)

        def ev(z, a=a, amp=amp):
            v = 1.0 - np.conj(a) * np.asarray(z, dtype=complex)
            out = np.exp((2.0 / p) * (amp - np.log(v)))
            return out if isinstance(z, np.ndarray) else complex(out)

        fam.append(AnalyticFunction(ev, f"kernel test at {a:.3g}"))
    return fam
