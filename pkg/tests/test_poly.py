import itertools

import pytest
from hypothesis import given, settings, strategies as st

from pcyclic import poly
from pcyclic.cyclotomic import all_cosets, coset
from pcyclic.errors import DivisionByZero
from pcyclic.poly import minimal_polynomial

from conftest import STATED_MODULI, field

P = 5
_polys = st.lists(st.integers(0, P - 1), max_size=7).map(lambda c: poly.normalize(P, c))


@settings(max_examples=200, deadline=None)
@given(_polys, _polys)
def test_divmod_identity(a, b):
    if b == poly.ZERO:
        with pytest.raises(DivisionByZero):
            poly.poly_divmod(P, a, b)
        return
    q, r = poly.poly_divmod(P, a, b)
    assert poly.add(P, poly.mul(P, q, b), r) == a
    assert poly.degree(r) < poly.degree(b)


@settings(max_examples=100, deadline=None)
@given(_polys, _polys, _polys)
def test_ring_laws(a, b, c):
    assert poly.mul(P, a, poly.add(P, b, c)) == poly.add(P, poly.mul(P, a, b), poly.mul(P, a, c))
    assert poly.sub(P, poly.add(P, a, b), b) == a


def test_zero_polynomial_degree():
    assert poly.degree(poly.ZERO) == -1
    assert poly.normalize(5, [0, 0]) == ()


def test_irreducible_counts():
    # number of monic irreducible quadratics over GF(p) is (p^2 - p)/2
    for p in (3, 5, 7):
        n = sum(poly.is_irreducible(p, (a, b, 1)) for a in range(p) for b in range(p))
        assert n == (p * p - p) // 2


def test_text_round_trip():
    f = (2, 4, 4, 0, 1)
    assert poly.format_poly(f) == "x^4 + 4x^2 + 4x + 2"
    assert poly.parse_poly("x^4 + 4x^2 + 4x + 2", 5) == f
    assert poly.parse_coeffs(poly.format_coeffs(f)) == f


def test_minpoly_basic_cases():
    ctx = field(5, 4, STATED_MODULI[5, 4])
    assert minimal_polynomial(ctx, 0) == (4, 1)
    assert minimal_polynomial(ctx, 1) == ctx.modulus


def test_minpoly_alpha3_divides_generator_of_c013():
    ctx = field(5, 4, STATED_MODULI[5, 4])
    m3 = minimal_polynomial(ctx, 3)
    assert m3 == (3, 3, 3, 2, 1)  # x^4+2x^3+3x^2+3x+3
    assert poly.degree(m3) == 4 and poly.is_irreducible(5, m3)


@pytest.mark.parametrize("p,m", [(5, 2), (7, 2), (5, 3), (3, 4)])
def test_minpoly_properties(p, m):
    ctx = field(p, m)
    n = ctx.order
    prod = poly.ONE
    for c in all_cosets(p, n):
        f = minimal_polynomial(ctx, c.leader)
        assert poly.degree(f) == c.size
        assert poly.is_irreducible(p, f)
        for j in c.elements:
            assert minimal_polynomial(ctx, j) == f
        root = ctx.alpha_pow(c.leader)
        acc = 0
        for i, a in enumerate(f):
            acc = ctx.add(acc, ctx.smul(a, ctx.pow(root, i)))
        assert acc == 0
        prod = poly.mul(p, prod, f)
    assert prod == poly.sub(p, (0,) * n + (1,), poly.ONE)


def test_quadratic_family_irreducible_over_f5():
    for b in (1, 2, 3):
        assert poly.is_irreducible(5, (b, 2 * (b + 1) % 5, 1))
