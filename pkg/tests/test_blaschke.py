import numpy as np
import pytest

from blaschke_lab.blaschke import (
    BlaschkeProduct,
    compose_min_on_compact,
    deleted_product,
    derivative,
    evaluate,
    local_zero_count,
    log_abs_evaluate,
    max_local_count,
    partition_separated,
    separation_report,
)
from blaschke_lab.disk import (
    FiniteSequence,
    InvariantViolation,
    MoebiusMap,
    DiskPoint,
    psh_distance,
    psh_distance_pairwise,
)
from blaschke_lab.generators import GeneratorSpec, gen_escalating_multiplicity, gen_union


def random_sequence(seed, n=12, r_max=0.95):
    rng = np.random.default_rng(seed)
    pts = set()
    while len(pts) < n:
        z = rng.uniform(0.05, r_max) * np.exp(1j * rng.uniform(0, 2 * np.pi))
        pts.add(complex(z))
    return FiniteSequence.from_complex(sorted(pts, key=abs))


def test_evaluate_examples():
    assert evaluate(BlaschkeProduct.from_complex([0.0]), 0.5) == pytest.approx(0.5)
    assert evaluate(BlaschkeProduct.from_complex([0.5]), 0.0) == pytest.approx(0.5)
    b = BlaschkeProduct.from_complex([0.3 + 0.1j, -0.4], [2, 1])
    assert evaluate(b, 0.3 + 0.1j) == 0.0
    assert evaluate(b, -0.4) == 0.0
    assert evaluate(BlaschkeProduct.from_complex([]), 0.3) == 1.0


def test_modulus_bounded_and_boundary():
    rng = np.random.default_rng(1)
    b = BlaschkeProduct(random_sequence(5, n=8, r_max=0.8))
    z = rng.uniform(0, 0.999, 10**4) * np.exp(1j * rng.uniform(0, 2 * np.pi, 10**4))
    assert (np.abs(evaluate(b, z)) <= 1.0 + 1e-12).all()
    ring = (1.0 - 1e-12) * np.exp(1j * rng.uniform(0, 2 * np.pi, 200))
    mods = np.abs(evaluate(b, ring))
    assert (np.abs(mods - 1.0) <= 1e-8).all()


def test_log_abs_matches_evaluate():
    b = BlaschkeProduct(random_sequence(7, n=10))
    rng = np.random.default_rng(2)
    z = rng.uniform(0, 0.99, 50) * np.exp(1j * rng.uniform(0, 2 * np.pi, 50))
    direct = np.abs(evaluate(b, z))
    logs = np.exp(log_abs_evaluate(b, z))
    assert np.allclose(direct, logs, rtol=1e-12)
    assert log_abs_evaluate(b, b.zeros.points[0].z) == -np.inf


def test_deleted_product_examples():
    b = BlaschkeProduct.from_complex([0.0, 0.5])
    assert abs(deleted_product(b, 0)) == pytest.approx(0.5)
    assert deleted_product(BlaschkeProduct.from_complex([0.3]), 0) == 1.0
    assert deleted_product(BlaschkeProduct.from_complex([0.3], [2]), 0) == 0.0
    with pytest.raises(IndexError):
        deleted_product(b, 5)


def test_derivative_examples():
    assert derivative(BlaschkeProduct.from_complex([0.0]), 0.7 + 0.1j) == pytest.approx(1.0)
    b = BlaschkeProduct.from_complex([0.0, 0.5])
    assert abs(derivative(b, 0.0)) == pytest.approx(0.5)
    assert derivative(BlaschkeProduct.from_complex([0.4], [3]), 0.4) == 0.0


def test_derivative_finite_differences():
    b = BlaschkeProduct(random_sequence(11, n=9))
    rng = np.random.default_rng(3)
    for _ in range(20):
        z = complex(rng.uniform(-0.6, 0.6), rng.uniform(-0.6, 0.6))
        if min(abs(z - a) for a in b.zeros.zs) < 1e-3:
            continue
        h = 1e-6
        fd = (evaluate(b, z + h) - evaluate(b, z - h)) / (2 * h)
        assert derivative(b, z) == pytest.approx(fd, rel=1e-6)


def test_derivative_identity_at_zeros():
    for seed in range(5):
        b = BlaschkeProduct(random_sequence(seed, n=15))
        for j, p in enumerate(b.zeros.points):
            lhs = (1.0 - abs(p.z) ** 2) * abs(derivative(b, p.z))
            assert lhs == pytest.approx(abs(deleted_product(b, j)), rel=1e-10)


def test_separation_report():
    rep = separation_report(BlaschkeProduct.from_complex([0.0, 0.5]))
    assert rep.delta == pytest.approx(0.5)
    assert rep.discreteness == pytest.approx(0.5)
    assert separation_report(BlaschkeProduct.from_complex([0.3])).delta == 1.0
    rep2 = separation_report(BlaschkeProduct.from_complex([0.3, 0.5], [2, 1]))
    assert rep2.delta == 0.0
    assert rep2.discreteness == 0.0
    with pytest.raises(InvariantViolation):
        separation_report(BlaschkeProduct.from_complex([]))


def test_delta_below_discreteness():
    for seed in range(4):
        rep = separation_report(BlaschkeProduct(random_sequence(seed)))
        assert rep.delta <= rep.discreteness + 1e-15
        assert rep.delta == pytest.approx(rep.delta_prime, rel=1e-10)


def test_local_zero_count():
    b = BlaschkeProduct.from_complex([0.0, 0.1])
    assert local_zero_count(b, 0.0, 0.5) == 2
    assert local_zero_count(b, -0.9, 0.3) == 0
    ce = gen_escalating_multiplicity(5)
    bce = BlaschkeProduct(ce)
    assert local_zero_count(bce, ce.points[-1].z, 0.5) >= 5
    with pytest.raises(ValueError):
        local_zero_count(b, 0.0, 1.5)


def test_max_local_count():
    b = BlaschkeProduct.from_complex([0.0, 0.1, 0.2])
    assert max_local_count(b, 0.5) == 3
    spread = BlaschkeProduct.from_complex([0.0, 0.9, -0.9])
    assert max_local_count(spread, 0.3) == 1
    assert max_local_count(BlaschkeProduct.from_complex([]), 0.5) == 0
    for n in (3, 6):
        assert max_local_count(BlaschkeProduct(gen_escalating_multiplicity(n)), 0.5) >= n


def test_partition_separated():
    s = FiniteSequence.from_complex([0, 0.1, 0.9])
    parts = partition_separated(s, 0.5)
    assert [sorted(p.z.real for p in q.points) for q in parts] == [[0, 0.9], [0.1]]
    one = partition_separated(FiniteSequence.from_complex([0, 0.9]), 0.5)
    assert len(one) == 1
    with pytest.raises(InvariantViolation, match="inseparable"):
        partition_separated(FiniteSequence.from_complex([0.5], [2]), 0.5)
    with pytest.raises(ValueError):
        partition_separated(s, 1.2)


def test_partition_properties():
    for seed in (0, 3):
        s = gen_union(3, GeneratorSpec("radial_geometric", {"q": 0.5, "n": 8}, seed))
        for sep in (0.3, 0.5):
            parts = partition_separated(s, sep)
            all_pts = sorted((z.real, z.imag) for q in parts for z in q.zs)
            assert all_pts == sorted((z.real, z.imag) for z in s.zs)
            for q in parts:
                if len(q) > 1:
                    d = psh_distance_pairwise(q.zs, q.zs)
                    assert d[~np.eye(len(q), dtype=bool)].min() > sep
            assert len(parts) <= max_local_count(BlaschkeProduct(s), sep)


def test_compose_probe():
    assert compose_min_on_compact(
        BlaschkeProduct.from_complex([0.3]), 0.3, 0.5
    ) == pytest.approx(0.5, rel=1e-10)
    ce = gen_escalating_multiplicity(6)
    b = BlaschkeProduct(ce)
    vals = [compose_min_on_compact(b, z.z, 0.5) for z in ce.points]
    for n, v in enumerate(vals, start=1):
        assert v <= 0.5**n + 1e-9
    # decay along the truncation family: each level's own product probed at
    # its deepest point
    level_vals = [
        compose_min_on_compact(BlaschkeProduct(gen_escalating_multiplicity(n)),
                               1.0 - 0.25**n, 0.5)
        for n in range(1, 7)
    ]
    assert all(b2 < a2 for a2, b2 in zip(level_vals, level_vals[1:]))
    with pytest.raises(ValueError):
        compose_min_on_compact(b, 0.0, 1.2)


def test_moebius_covariance():
    b = BlaschkeProduct(random_sequence(21, n=6, r_max=0.7))
    zeta = DiskPoint(0.35, -0.2)
    phi = MoebiusMap(zeta)
    transformed = BlaschkeProduct(FiniteSequence.from_complex(phi(b.zeros.zs)))
    rng = np.random.default_rng(4)
    z = rng.uniform(0, 0.9, 100) * np.exp(1j * rng.uniform(0, 2 * np.pi, 100))
    lhs = np.abs(evaluate(b, phi(z)))
    rhs = np.abs(evaluate(transformed, z))
    assert np.allclose(lhs, rhs, atol=1e-10)
