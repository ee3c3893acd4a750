import pytest

from gradedca import sampler
from gradedca.hilbert import hilbert_coefficients
from gradedca.poly import CoeffField, PolyRing

RING2 = PolyRing(CoeffField(32003), ["x", "y"])


def test_determinism(two_plane):
    cfg = sampler.SampleConfig(seed=12, count=6)
    a = sampler.sample_parameter_ideals(two_plane, cfg)
    b = sampler.sample_parameter_ideals(two_plane, cfg)
    assert [tuple(map(repr, q.gens)) for q in a] == \
           [tuple(map(repr, q.gens)) for q in b]
    other = sampler.sample_parameter_ideals(
        two_plane, sampler.SampleConfig(seed=13, count=6))
    assert [tuple(map(repr, q.gens)) for q in a] != \
           [tuple(map(repr, q.gens)) for q in other]


def test_sampled_ideals_are_parameters(mixed_line, two_plane):
    for module in (mixed_line, two_plane):
        cfg = sampler.SampleConfig(seed=3, count=5)
        for q in sampler.sample_parameter_ideals(module, cfg):
            assert q.colength_certificate >= 1
            assert all(g.is_homogeneous() for g in q.gens)


def test_estimate_lambda_buchsbaum(two_plane):
    est = sampler.estimate_lambda(
        two_plane, sampler.SampleConfig(seed=7, count=8))
    assert est.distinct == [-1] and est.min == est.max == -1
    assert "degree-bounded sample" in est.label


def test_estimate_xi_nonnegative(two_plane, mixed_line):
    for module in (two_plane, mixed_line):
        est = sampler.estimate_xi(
            module, sampler.SampleConfig(seed=8, count=5))
        assert est.min >= 0


def test_lambda_sweep_unbounded(plane_plus_line):
    ring = plane_plus_line.ring
    x, y, z = ring.gens()
    sweep = sampler.lambda_sweep(plane_plus_line, [x + y, z], [1, 2, 3, 4])
    assert sweep == [(1, -1), (2, -2), (3, -3), (4, -4)]


def test_wrong_generator_count_fails(two_plane):
    rng = sampler.SampleConfig(seed=1).rng()
    with pytest.raises(Exception):
        sampler.random_parameter_ideal(two_plane, [1], rng)


def test_random_parameter_module_shape():
    rng = sampler.SampleConfig(seed=21).rng()
    pm = sampler.random_parameter_module(RING2, [], 2, rng)
    assert pm.gens_count == 3 and pm.rank == 2 and pm.is_parameter
