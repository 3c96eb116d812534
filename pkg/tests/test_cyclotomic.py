import cmath
from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from dwcat.cyclotomic import Cyclotomic, cyclotomic_poly, phase_sum


def approx(z):
    # [DERIVED] floating point evaluation is an independent oracle
    w = cmath.exp(2j * cmath.pi / z.m)
    return sum(float(c) * w ** k for k, c in enumerate(z.coeffs))


def test_cyclotomic_polys():
    assert cyclotomic_poly(1) == (-1, 1)
    assert cyclotomic_poly(4) == (1, 0, 1)
    assert cyclotomic_poly(6) == (1, -1, 1)
    assert cyclotomic_poly(8) == (1, 0, 0, 0, 1)


def test_sum_of_roots_vanishes():
    for m in (2, 3, 4, 6, 8, 9, 16):
        assert phase_sum(m, range(m)) == Cyclotomic.rational(0)


elems = st.tuples(st.sampled_from([1, 2, 3, 4, 6, 8, 9, 16]), st.lists(st.integers(0, 4), min_size=1, max_size=16))


def build(spec):
    m, counts = spec
    return Cyclotomic.from_counts(m, (counts + [0] * m)[:m], Fraction(1, 3))


@settings(max_examples=150, deadline=None)
@given(elems, elems)
def test_ring_operations_match_numerics(a, b):
    x, y = build(a), build(b)
    assert abs(approx(x + y) - (approx(x) + approx(y))) < 1e-9
    assert abs(approx(x * y) - approx(x) * approx(y)) < 1e-8
    assert abs(approx(x - y) - (approx(x) - approx(y))) < 1e-9


@settings(max_examples=150, deadline=None)
@given(elems, elems)
def test_equality_is_numeric_equality(a, b):
    x, y = build(a), build(b)
    same = abs(approx(x) - approx(y)) < 1e-9
    assert (x == y) == same
    if same:
        assert hash(x) == hash(y)


def test_render_and_descent():
    assert Cyclotomic.rational(Fraction(1, 2)).render() == "1/2"
    assert (Cyclotomic.zeta(4) * Cyclotomic.zeta(4)).render() == "-1"
    z = Cyclotomic.zeta(8, 2)
    assert z == Cyclotomic.zeta(4, 1)
    assert z.render() == "1*zeta_4^1"
    assert Cyclotomic.zeta(3) + Cyclotomic.zeta(3, 2) == Cyclotomic.rational(-1)
    assert Cyclotomic.rational(4, 9).render() == "4"
