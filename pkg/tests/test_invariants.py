import random

from gradedca import invariants as inv
from gradedca.hilbert import hilbert_coefficients, module_length
from gradedca.gb import quotient_module
from gradedca.modules import GradedModule
from gradedca.poly import CoeffField, PolyRing
from gradedca.sampler import SampleConfig, sample_parameter_ideals

RING2 = PolyRing(CoeffField(32003), ["x", "y"])


def test_hdeg_free_module(free_plane):
    q = [free_plane.ring.var(0), free_plane.ring.var(1)]
    rep = inv.hdeg_report(free_plane, q)
    assert rep.hdeg == 1 and rep.deg == 1 and rep.torsions[0] == 0


def test_hdeg_mixed_line(mixed_line):
    q = [mixed_line.ring.var(1)]
    rep = inv.hdeg_report(mixed_line, q)
    assert rep.hdeg == 2 and rep.deg == 1 and rep.torsions == []


def test_hdeg_two_plane(two_plane):
    ring = two_plane.ring
    x, y, z, w = ring.gens()
    q = [x + z, y + w]
    rep = inv.hdeg_report(two_plane, q)
    assert rep.hdeg == 3 and rep.deg == 2
    assert rep.torsions == [1]


def test_e1_torsion_bound_equality(two_plane):
    ring = two_plane.ring
    x, y, z, w = ring.gens()
    q = [x + z, y + w]
    rep = inv.check_e1_torsion_bound(two_plane, q)
    assert rep.passed and rep.lhs == rep.rhs == 1


def test_chi1_hdeg_bound_equality(two_plane):
    ring = two_plane.ring
    x, y, z, w = ring.gens()
    q = [x + z, y + w]
    rep = inv.check_chi1_hdeg_bound(two_plane, q)
    assert rep.passed and rep.lhs == rep.rhs == 1


def test_bounds_on_sampled_ideals(mixed_line, two_plane):
    cfg = SampleConfig(seed=5, count=4, degree_bounds=(1, 2))
    for q in sample_parameter_ideals(two_plane, cfg):
        assert inv.check_e1_torsion_bound(two_plane, list(q.gens)).passed
        assert inv.check_chi1_hdeg_bound(two_plane, list(q.gens)).passed
    for q in sample_parameter_ideals(mixed_line, cfg):
        assert inv.check_chi1_hdeg_bound(mixed_line, list(q.gens)).passed


def test_d_sequence_detection(free_plane, mixed_line):
    x, y = RING2.gens()
    assert inv.is_d_sequence(free_plane, [x, y])
    # y, x on k[x,y]/(x^2, x*y): y is a nonzerodivisor-ish first element
    mx, my = mixed_line.ring.gens()
    assert inv.is_d_sequence(mixed_line, [my])


def test_hilbert_characteristic_equals_colength(free_plane, mixed_line,
                                                two_plane):
    rng = random.Random(3)
    for module in (free_plane, mixed_line, two_plane):
        cfg = SampleConfig(seed=rng.randrange(10**6), count=3,
                           degree_bounds=(1, 1))
        for q in sample_parameter_ideals(module, cfg):
            gens = list(q.gens)
            if not inv.is_d_sequence(module, gens):
                continue
            hx = inv.hilbert_characteristic(module, gens)
            assert hx == module_length(quotient_module(module, [
                module.ambient.basis(i).poly_mul(g)
                for g in gens for i in range(module.ambient.rank)]))


def test_betti_bound(free_plane, mixed_line, two_plane):
    rng = random.Random(9)
    for module in (mixed_line, two_plane):
        cfg = SampleConfig(seed=17, count=4, degree_bounds=(1, 1))
        for q in sample_parameter_ideals(module, cfg):
            gens = list(q.gens)
            if not inv.is_d_sequence(module, gens):
                continue
            rep = inv.betti_bound_check(module, gens)
            assert rep.passed


def test_classify_labels(free_plane, mixed_line, two_plane, plane_plus_line):
    def ideals(module, n=8):
        cfg = SampleConfig(seed=2, count=n, degree_bounds=(1, 2))
        return [list(q.gens) for q in sample_parameter_ideals(module, cfg)]

    assert inv.classify(free_plane, ideals(free_plane)) == "cohen-macaulay"
    assert inv.classify(two_plane, ideals(two_plane)) == "buchsbaum (sampled)"
    assert inv.classify(plane_plus_line, ideals(plane_plus_line)) == "general"


def test_buchsbaum_invariant(two_plane, mixed_line, plane_plus_line):
    i_m, bound = inv.buchsbaum_invariant(two_plane)
    assert i_m == 1 and bound >= i_m
    i_m2, _ = inv.buchsbaum_invariant(mixed_line)
    assert i_m2 == 1
    none_i, none_b = inv.buchsbaum_invariant(plane_plus_line)
    assert none_i is None and none_b is None


def test_standardness_biconditional(two_plane):
    cfg = SampleConfig(seed=4, count=10)
    ideals = [list(q.gens) for q in sample_parameter_ideals(two_plane, cfg)]
    data = inv.standardness_data(two_plane, ideals)
    assert data.I_M == 1
    for s in data.samples:
        assert s.is_standard == (s.deviation == data.I_M)
    assert data.all_standard() and data.constant_e1()
    assert {s.e1 for s in data.samples} == {-1}


def test_multiplicity_dim_zero():
    x, y = RING2.gens()
    m = GradedModule.quotient_ring(RING2, [x ** 2, y ** 3])
    assert inv.multiplicity(m, [x, y]) == module_length(m) == 6
