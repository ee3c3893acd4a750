import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gradedca.poly import (CoeffField, PolyError, PolyParseError, PolyRing,
                           grevlex_key, mon_div, mon_divides, mon_lcm,
                           monomials_of_degree)

FIELD = CoeffField(32003)
RING = PolyRing(FIELD, ["x", "y", "z"])


def rand_poly(rng, max_deg=3, terms=4):
    p = RING.zero()
    for _ in range(terms):
        mon = tuple(rng.randrange(max_deg + 1) for _ in range(3))
        p = p + RING.monomial(mon, FIELD.random(rng))
    return p


@given(st.integers(min_value=0, max_value=2 ** 40))
def test_field_inverse(seed):
    rng = random.Random(seed)
    a = FIELD.random_nonzero(rng)
    assert FIELD.mul(a, FIELD.inv(a)) == FIELD.one()


@given(st.integers(min_value=0, max_value=2 ** 40))
@settings(max_examples=40)
def test_ring_axioms(seed):
    rng = random.Random(seed)
    a, b, c = (rand_poly(rng) for _ in range(3))
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) * c == a * c + b * c
    assert (a * b) * c == a * (b * c)
    assert a + RING.zero() == a
    assert a * RING.one() == a
    assert a - a == RING.zero()


def test_field_validation():
    with pytest.raises(PolyError):
        CoeffField(4)
    with pytest.raises(PolyError):
        CoeffField(2)
    assert CoeffField(None).kind == "rationals"


def test_monomial_helpers():
    a, b = (2, 1, 0), (1, 3, 0)
    assert mon_lcm(a, b) == (2, 3, 0)
    assert mon_div((2, 3, 0), a) == (0, 2, 0)
    assert mon_div(a, b) is None
    assert mon_divides((1, 1, 0), (2, 1, 0))
    assert len(list(monomials_of_degree(3, 2))) == 6


def test_grevlex_order():
    # graded first; among degree-2 monomials in x,y: x^2 > xy > y^2
    x2 = grevlex_key((2, 0, 0))
    xy = grevlex_key((1, 1, 0))
    y2 = grevlex_key((0, 2, 0))
    assert x2 > xy > y2
    assert grevlex_key((0, 0, 1)) < grevlex_key((2, 0, 0))


def test_parser_roundtrip():
    x, y, z = RING.gens()
    assert RING.poly("3*x^2*y - y^3 + 1") == \
        RING.const(3) * x ** 2 * y - y ** 3 + RING.one()
    assert RING.poly("0").is_zero()
    assert RING.poly("-x") == -x


def test_parser_position_diagnostics():
    with pytest.raises(PolyParseError) as err:
        RING.poly("x + @y")
    assert err.value.position is not None


def test_homogeneity_and_leading():
    x, y, z = RING.gens()
    p = x * y + z ** 2
    assert p.is_homogeneous() and p.total_degree() == 2
    assert not (x + y ** 2).is_homogeneous()
    mon, _ = p.leading()
    assert mon == (1, 1, 0)
