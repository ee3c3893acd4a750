import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gradedca import hilbert as hb
from gradedca.modules import FreeModule, GradedModule
from gradedca.poly import CoeffField, PolyRing

RING = PolyRing(CoeffField(32003), ["x", "y"])
X, Y = RING.gens()


def test_dim_oracles(free_plane, mixed_line, two_plane):
    assert hb.dim_module(free_plane) == 2
    assert hb.dim_module(mixed_line) == 1
    assert hb.dim_module(two_plane) == 2
    zero = GradedModule.quotient_ring(RING, [RING.one()])
    assert hb.dim_module(zero) == hb.NEG_INF


def test_length_oracles(free_plane):
    assert hb.module_length(
        GradedModule.quotient_ring(RING, [X ** 2, X * Y, Y ** 2])) == 3
    assert hb.module_length(
        GradedModule.quotient_ring(RING, [X ** 2, Y ** 3])) == 6
    assert hb.module_length(free_plane) is None


def test_hilbert_samuel_tables(free_plane, mixed_line):
    t = hb.hilbert_samuel(free_plane, [X, Y], 4)
    assert t.values == [1, 3, 6, 10, 15]
    t = hb.hilbert_samuel(mixed_line, [Y], 4)
    assert t.values == [2, 3, 4, 5, 6]
    assert all(a <= b for a, b in zip(t.values, t.values[1:]))


def test_coefficient_oracles(free_plane, mixed_line, two_plane, ring4):
    assert hb.hilbert_coefficients(free_plane, [X, Y]).e == [1, 0, 0]
    assert hb.hilbert_coefficients(mixed_line, [Y]).e == [1, -1]
    assert hb.hilbert_coefficients(free_plane, [X ** 2, Y ** 3]).e == [6, 0, 0]
    x, y, z, w = ring4.gens()
    assert hb.hilbert_coefficients(two_plane, [x + z, y + w]).e == [2, -1, 0]


@given(st.integers(min_value=1, max_value=3),
       st.integers(min_value=1, max_value=3))
@settings(max_examples=8, deadline=None)
def test_monomial_regular_sequences(a, b):
    # e0 = product of exponents, higher e_i vanish
    free = GradedModule.free(RING)
    e = hb.hilbert_coefficients(free, [X ** a, Y ** b]).e
    assert e == [a * b, 0, 0]


def test_presentation_invariance(mixed_line):
    # same module, redundant presentation
    amb = FreeModule(RING, [0])
    rels = [amb.element([X ** 2]), amb.element([X * Y]),
            amb.element([X ** 2 + X * Y]), amb.element([X ** 3])]
    other = GradedModule.from_relations(amb, rels)
    for gens in ([Y], [Y ** 2]):
        a = hb.hilbert_samuel(mixed_line, gens, 3).values
        b = hb.hilbert_samuel(other, gens, 3).values
        assert a == b


def test_parameter_ideal_validation(free_plane, mixed_line):
    q = hb.make_parameter_ideal(free_plane, [X, Y])
    assert q.colength_certificate == 1 and q.degrees == (1, 1)
    with pytest.raises(hb.HilbertError):
        hb.make_parameter_ideal(free_plane, [X])
    with pytest.raises(hb.HilbertError):
        hb.make_parameter_ideal(free_plane, [X, X])
    with pytest.raises(hb.HilbertError):
        hb.make_parameter_ideal(mixed_line, [X])  # x kills the line direction


def test_non_artinian_error_names_direction(free_plane):
    with pytest.raises(hb.HilbertError) as err:
        hb.colength(free_plane, [X])
    assert "y" in str(err.value)


def test_superficial_oracles(free_plane, mixed_line, two_plane, ring4):
    q = hb.make_parameter_ideal(free_plane, [X, Y])
    rep = hb.superficial_check(free_plane, q, X)
    assert rep.passed and rep.e_module[0] == 1

    qm = hb.make_parameter_ideal(mixed_line, [Y])
    rep = hb.superficial_check(mixed_line, qm, Y)
    assert rep.passed and rep.colon_length == 1
    assert rep.e_module == [1, -1] and rep.e_quotient == [2]

    x, y, z, w = ring4.gens()
    qt = hb.make_parameter_ideal(two_plane, [x + z, y + w])
    rep = hb.superficial_check(two_plane, qt, x + z)
    assert rep.passed
    # dim 2: e1(M) = e1(M/hM) + colon length
    assert rep.e_module[1] == rep.e_quotient[1] + rep.colon_length


def test_coefficients_of_dim_zero_module():
    pts = GradedModule.quotient_ring(RING, [X ** 2, Y ** 3])
    hc = hb.hilbert_coefficients(pts, [])
    assert hc.e == [6]


def test_hilbert_function_values(two_plane):
    assert [hb.hilbert_function(two_plane, n) for n in range(4)] == [1, 4, 6, 8]
