"""Seeded generators for the sequence families used across the toolkit.

Every generator is a pure function of its parameters and seed; the same
inputs reproduce the same sequence bit for bit.  Families:

* radial geometric -- depths 1 - q^k on prescribed rays; uniformly
  separated for a single ray with q <= 1/2;
* unions of rotated, jittered copies of a base family;
* the repeated-point escalation family: the point at depth gap^n carries
  multiplicity n, so transformed zero masses grow linearly with the level
  while the plain zero mass stays summable;
* Carleson-controlled random clouds, rejection-sampled square by square;
* perturbed variants: satellites at small pseudohyperbolic distance and
  occasional doubled points, for clustered interpolation problems.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .carleson import carleson_norm
from .disk import FiniteSequence, InvariantViolation


@dataclass(frozen=True)
class GeneratorSpec:
    """Declarative recipe: family tag, family parameters, seed."""

    family: str
    params: dict = field(default_factory=dict)
    seed: int = 0

    def build(self) -> FiniteSequence:
        if self.family == "radial_geometric":
            return gen_radial_geometric(**self.params)
        if self.family == "union_of_separated":
            return gen_union(self.params["m"], self.params["base"])
        if self.family == "escalating_multiplicity":
            return gen_escalating_multiplicity(**self.params)
        if self.family == "random_carleson":
            return gen_random_carleson(self.seed, **self.params)
        if self.family == "perturbed":
            kw = dict(self.params)
            base = kw.pop("base")
            if isinstance(base, GeneratorSpec):
                base = base.build()
            return gen_perturbed(base, seed=self.seed, **kw)
        raise ValueError(f"unknown family {self.family!r}")


def gen_radial_geometric(q: float, n: int, ray_angles=(0.0,)) -> FiniteSequence:
    """Points 1 - q^k for k = 1..n on each given ray angle."""
    if not 0 < q < 1:
        raise ValueError("q must lie in (0, 1)")
    if n < 1:
        raise ValueError("n must be positive")
    pts = []
    for th in ray_angles:
        rot = np.exp(1j * float(th))
        for k in range(1, n + 1):
            pts.append((1.0 - q**k) * rot)
    return FiniteSequence.from_complex(pts)


def gen_union(m: int, base: GeneratorSpec, max_attempts: int = 16) -> FiniteSequence:
    """Union of m rotated and jittered copies of the base family.

    Copy j rotates by 2*pi*j/m plus a small seeded jitter.  If two copies
    collide exactly the whole draw regenerates with the next seed.
    """
    if m < 1:
        raise ValueError("m must be positive")
    seed = base.seed
    for _ in range(max_attempts):
        rng = np.random.default_rng(seed)
        base_seq = GeneratorSpec(base.family, base.params, seed).build()
        zs = base_seq.zs
        mults = list(base_seq.multiplicities)
        pts = []
        all_mults = []
        for j in range(m):
            jitter = rng.uniform(-np.pi / (8 * m), np.pi / (8 * m)) if m > 1 else 0.0
            rot = np.exp(1j * (2.0 * np.pi * j / m + jitter))
            pts.extend(zs * rot)
            all_mults.extend(mults)
        try:
            return FiniteSequence.from_complex(pts, all_mults)
        except InvariantViolation:
            seed += 1
    raise RuntimeError("union generator kept colliding; widen the jitter")


def gen_escalating_multiplicity(n_max: int, base_gap: float = 0.25,
                            split: bool = False,
                            split_spacing: float = 1e-4) -> FiniteSequence:
    """Escalating multiplicity family: depth gap^n with multiplicity n.

    The transformed zero mass probed at level n's point is at least n while
    sum n * gap^n stays finite, so separation-flavored diagnostics fail in
    a controlled way as n_max grows.  With split=True each level's repeated
    point becomes n distinct points at pseudohyperbolic spacing about
    split_spacing, for operations requiring simple zeros.
    """
    if not 0 < base_gap < 1:
        raise ValueError("base_gap must lie in (0, 1)")
    if n_max < 1:
        raise ValueError("n_max must be positive")
    pts = []
    mults = []
    for n in range(1, n_max + 1):
        zn = 1.0 - base_gap**n
        if not split:
            pts.append(zn + 0.0j)
            mults.append(n)
        else:
            for j in range(n):
                pts.append(zn + 1j * j * split_spacing * (1.0 - zn**2))
                mults.append(1)
    return FiniteSequence.from_complex(pts, mults)


def _dyadic_ratios_through(angles, depths, weights, cand_angle, cand_depth,
                           cand_weight, levels: int) -> float:
    """Largest mass/size ratio over the fixed dyadic squares that would
    contain the candidate, with the candidate included.

    Controlling every dyadic square at every insertion dominates the full
    arc family: any arc is covered by two adjacent dyadic arcs of at most
    twice its length, so the true norm stays below 4x the dyadic cap.
    """
    a = np.append(angles, cand_angle)
    d = np.append(depths, cand_depth)
    w = np.append(weights, cand_weight)
    worst = 0.0
    for l in range(levels + 1):
        m = 2.0 ** (-l)
        if cand_depth >= m:
            break
        cell = np.floor(cand_angle / (2.0 * np.pi) * 2**l)
        lo = cell * 2.0 * np.pi / 2**l
        inside = (d < m) & ((a - lo) % (2.0 * np.pi) < 2.0 * np.pi * m)
        worst = max(worst, float(w[inside].sum()) / m)
    return worst


def gen_random_carleson(seed: int, n: int, target_norm: float,
                        max_tries_per_point: int = 400) -> FiniteSequence:
    """Random cloud whose Carleson norm stays below 1.2 * target_norm.

    Points draw a dyadic depth level and a uniform angle; a candidate is
    accepted only while the squares it lands in keep mass/size below a
    safety fraction of the target.  The final norm is then asserted against
    the full square family.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if not target_norm > 0:
        raise ValueError("target_norm must be positive")
    rng = np.random.default_rng(seed)
    # cap every dyadic square at 0.3 * target: the covering argument then
    # bounds the full-family norm by 1.2 * target unconditionally.
    margin = 0.3 * target_norm
    # each dyadic level-l cell admits mass about margin * 2^-l while one
    # atom at that level weighs about 1.5 * 2^-l, so the levels must be
    # deep enough that the cells can hold n points between them (and the
    # whole-circle cell caps the total mass at margin).
    base_level = max(1, int(np.ceil(np.log2(max(2.0 * n / margin, 2.0)))) - 1)
    level_probs = np.array([1.0, 2.0, 4.0, 8.0]) / 15.0
    deepest = base_level + 3
    angles = np.zeros(0)
    depths = np.zeros(0)
    weights = np.zeros(0)
    pts = []
    for _ in range(n):
        for attempt in range(max_tries_per_point):
            l = base_level + int(rng.choice(4, p=level_probs))
            depth = 2.0 ** (-l - 1) * (1.0 + rng.uniform())
            ang = rng.uniform(0.0, 2.0 * np.pi)
            r = 1.0 - depth
            wgt = 1.0 - r * r
            if _dyadic_ratios_through(angles, depths, weights, ang, depth, wgt,
                                      deepest) <= margin:
                angles = np.append(angles, ang)
                depths = np.append(depths, depth)
                weights = np.append(weights, wgt)
                pts.append(r * np.exp(1j * ang))
                break
        else:
            raise RuntimeError("sampling budget exhausted")
    seq = FiniteSequence.from_complex(pts)
    norm = carleson_norm(seq).norm
    if norm > 1.2 * target_norm:
        raise RuntimeError(
            f"sampling budget exhausted: norm {norm:.3f} above 1.2 * target"
        )
    return seq


def gen_perturbed(base: FiniteSequence, n_satellites: int = 0,
                  satellite_psh: float = 0.09, n_doubles: int = 0,
                  seed: int = 0) -> FiniteSequence:
    """Satellites at small pseudohyperbolic distance plus doubled points.

    Satellites attach to distinct seeded base points at distance about
    satellite_psh (well below cluster scale); doubled points raise the
    multiplicity of further distinct points to 2.
    """
    rng = np.random.default_rng(seed)
    zs = list(base.zs)
    mults = list(base.multiplicities)
    n_base = len(zs)
    if n_satellites + n_doubles > n_base:
        raise ValueError("not enough base points to perturb")
    chosen = rng.choice(n_base, size=n_satellites + n_doubles, replace=False)
    for i in chosen[:n_satellites]:
        z = zs[i]
        zs.append(z + satellite_psh * (1.0 - abs(z) ** 2)
                  * np.exp(1j * rng.uniform(0.0, 2.0 * np.pi)))
        mults.append(1)
    for i in chosen[n_satellites:]:
        mults[i] = 2
    return FiniteSequence.from_complex(zs, mults)
