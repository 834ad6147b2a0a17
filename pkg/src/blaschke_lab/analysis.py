"""The per-sequence diagnostic battery behind analyze and verify.

Computes every boundedness-flavored indicator for a finite sequence: the
separation constants, Carleson norm, transformed zero-mass supremum, local
zero counts, the composition probe, the divisor and multiplication probes.
Each indicator gets a direction flag against a desk-scale threshold; a
sequence behaves like a finite union of interpolating sequences when all
flags point the same way.  The thresholds are documented heuristics for
the generator families shipped here, not theorems.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import bergman as bg
from .blaschke import (
    BlaschkeProduct,
    compose_min_on_compact,
    max_local_count,
    separation_report,
)
from .carleson import carleson_norm, uniform_blaschke_sup
from .disk import FiniteSequence, hyperbolic_grid

# desk-scale direction thresholds (see module docstring)
THRESHOLDS = {
    "union_parts_max": 5,   # greedy parts at separation 0.3
    "part_delta_min": 3e-3,
    "carleson_max": 10.0,
    "ubs_max": 9.0,
    "count_max": 5,
    "nonzero_min": 1e-2,
    "divisor_max": 16.0,
    "mb_min": 5e-2,
}


def union_separation(s: FiniteSequence, sep: float = 0.3):
    """Greedy split of the multiplicity-expanded points into parts with
    pairwise distance > sep; returns (part count, min per-part delta).

    Repeated points land in distinct parts, so bounded multiplicity still
    reads as a small finite union while escalating multiplicity does not.
    """
    zs = list(s.expanded())
    order = sorted(range(len(zs)), key=lambda i: (abs(zs[i]), np.angle(zs[i])))
    parts: list[list[complex]] = []
    for i in order:
        for part in parts:
            if all(abs((zs[i] - w) / (1.0 - w.conjugate() * zs[i])) > sep for w in part):
                part.append(zs[i])
                break
        else:
            parts.append([zs[i]])
    min_delta = 1.0
    for part in parts:
        rep = separation_report(BlaschkeProduct(FiniteSequence.from_complex(part)))
        min_delta = min(min_delta, rep.delta)
    return len(parts), min_delta


_GRID: list = []


def analysis_grid() -> bg.QuadratureGrid:
    """Lighter quadrature for batch diagnostics (percent-level accuracy)."""
    if not _GRID:
        _GRID.append(bg.QuadratureGrid.build(rings=120, min_gap=1e-7,
                                             max_angular=2048))
    return _GRID[0]


@dataclass(frozen=True)
class AnalysisReport:
    n_listed: int
    total_count: int
    delta: float
    delta_prime: float
    discreteness: float
    union_parts: int
    part_delta: float
    carleson: float
    carleson_method: str
    blaschke_sup: float
    max_count_half: int
    nonzero_probe: float
    divisor_ratio: float
    mb_probe: float
    flags: dict = field(default_factory=dict)
    verdict: str = "n/a"  # pass | fail | n/a


def analyze_sequence(s: FiniteSequence, p: float = 0.5, alpha: float = 0.0,
                     probe_pitch: float = 0.0,
                     grid: bg.QuadratureGrid | None = None,
                     max_probe_centers: int = 4) -> AnalysisReport:
    """Run the full battery; probe_pitch > 0 adds a hyperbolic probe grid
    to the transformed-mass supremum search.

    The direction thresholds are calibrated at the default exponent 1/2,
    where the divisor and multiplication probes contrast most sharply.
    """
    if len(s) == 0:
        return AnalysisReport(0, 0, 0.0, 0.0, 0.0, 0, 0.0, 0.0, "n/a",
                              0.0, 0, 0.0, 0.0, 0.0, {}, "n/a")
    grid = grid or analysis_grid()
    b = BlaschkeProduct(s)
    sep = separation_report(b)
    n_parts, part_delta = union_separation(s)
    cn = carleson_norm(s)
    centers = list(s.zs)
    if probe_pitch > 0:
        centers += list(hyperbolic_grid(float(np.abs(s.zs).max()), probe_pitch))
    ubs = uniform_blaschke_sup(s, centers)
    ncount = max_local_count(b, 0.5)
    nonzero = min(
        compose_min_on_compact(b, z, 0.5) for z in s.zs
    )
    deepest = s.zs[np.argmax(np.abs(s.zs))]
    family = [
        bg.blaschke_fn(b),
        bg.times_blaschke(bg.conformal_density(deepest, 2.0 / p), b),
    ]
    divisor = bg.universal_divisor_ratio(b, family, p, alpha, grid)
    probe_centers = sorted(s.zs, key=lambda z: -abs(z))[:max_probe_centers]
    mb = bg.mb_lower_probe(b, probe_centers, p, grid)

    t = THRESHOLDS
    flags = {
        "union_separation": (n_parts <= t["union_parts_max"]
                             and part_delta >= t["part_delta_min"]),
        "carleson": cn.norm <= t["carleson_max"],
        "blaschke_sup": ubs <= t["ubs_max"],
        "local_count": ncount <= t["count_max"],
        "uniformly_nonzero": nonzero >= t["nonzero_min"],
        "universal_divisor": divisor <= t["divisor_max"],
        "mult_bounded_below": mb >= t["mb_min"],
    }
    verdict = "pass" if all(flags.values()) else "fail"
    return AnalysisReport(
        len(s), s.total_count, sep.delta, sep.delta_prime, sep.discreteness,
        n_parts, part_delta, cn.norm, cn.method, ubs, ncount, nonzero,
        divisor, mb, flags, verdict,
    )


def direction_agreement(report: AnalysisReport) -> bool:
    """True when every indicator flag points the same way (the equivalence
    holds in both directions; mixed flags mean something is off)."""
    if not report.flags:
        return True
    vals = list(report.flags.values())
    return all(vals) or not any(vals)


def report_sections(rep: AnalysisReport) -> dict:
    """Schema-stable report layout: the same keys on every run."""
    return {
        "sequence": {
            "points": rep.n_listed,
            "total_with_multiplicity": rep.total_count,
        },
        "separation": {
            "delta": rep.delta,
            "delta_prime": rep.delta_prime,
            "discreteness": rep.discreteness,
            "union_parts": rep.union_parts,
            "part_delta": rep.part_delta,
        },
        "carleson": {
            "norm": rep.carleson,
            "method": rep.carleson_method,
            "blaschke_sup": rep.blaschke_sup,
        },
        "probes": {
            "max_count_half": rep.max_count_half,
            "nonzero_probe": rep.nonzero_probe,
            "divisor_ratio": rep.divisor_ratio,
            "mb_probe": rep.mb_probe,
        },
        "flags": {k: bool(v) for k, v in rep.flags.items()} or {
            k: "n/a" for k in (
                "union_separation", "carleson", "blaschke_sup", "local_count",
                "uniformly_nonzero", "universal_divisor", "mult_bounded_below",
            )
        },
        "verdict": {
            "interpolating_union": rep.verdict,
            "direction_agreement": "pass" if direction_agreement(rep) else "fail",
        },
    }
