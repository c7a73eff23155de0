import pytest
from sympy import QQ

from pysing.errors import NotGroebnerError
from pysing.ideal import (INFINITE, IdealBasis, MonomialOrder, colength, colon_saturate, eliminate,
                          groebner_basis, intersect_ideals, is_groebner_basis, normal_form,
                          s_polynomial, standard_monomials)
from pysing.poly import parse_poly, ring_of


def polys(*texts, variables=("s", "t")):
    return [parse_poly(text, variables) for text in texts]


def test_reduced_basis():
    basis = groebner_basis(polys("s^2 + t^2 - 1", "s - t"))
    s, t = ring_of("s", "t").gens
    assert basis.generators == (s - t, t**2 - QQ(1, 2))
    assert is_groebner_basis(basis)
    assert colength(basis) == 2
    assert basis.contains(s**2 + t**2 - 1)
    assert not basis.contains(s)


def test_unit_and_zero_ideal():
    assert groebner_basis(polys("s", "s + 1")).is_unit
    zero = groebner_basis(polys("0"))
    assert zero.is_zero and colength(zero) == INFINITE


@pytest.mark.parametrize("gens", [
    ("s^3 - 2*s*t", "s^2*t - 2*t^2 + s"),
    ("s*t - 1", "s^2 - t", "t^3 - s*t"),
    ("s^2*t + t^2", "s*t^2 - s", "s^4 - t"),
])
def test_every_emitted_basis_is_groebner(gens):
    basis = groebner_basis(polys(*gens))
    assert is_groebner_basis(basis)
    for f in polys(*gens):
        assert not normal_form(f, basis)
    assert all(g.LC == 1 for g in basis.generators)


def test_s_polynomial_cancels_leading_terms():
    f, g = polys("s^2*t + 1", "s*t^2 - s")
    h = s_polynomial(f, g)
    assert h == parse_poly("t + s^2", ("s", "t"))


def test_basis_is_order_independent_of_input():
    gens = polys("s^3 - 2*s*t", "s^2*t - 2*t^2 + s")
    assert groebner_basis(gens).generators == groebner_basis(gens[::-1]).generators


def test_normal_form_requires_groebner():
    order = MonomialOrder(("s", "t"))
    raw = IdealBasis(tuple(polys("s*t - 1")), order)
    with pytest.raises(NotGroebnerError):
        normal_form(polys("s")[0], raw)
    with pytest.raises(NotGroebnerError):
        colength(raw)


def test_colength_and_standard_monomials():
    basis = groebner_basis(polys("s^2", "s*t", "t^3"))
    assert sorted(standard_monomials(basis)) == [(0, 0), (0, 1), (0, 2), (1, 0)]
    assert colength(basis) == 4
    assert colength(groebner_basis(polys("s*t"))) == INFINITE


def test_eliminate():
    basis = eliminate(polys("x - s", "y - s^2", variables=("x", "y", "s")), ["s"])
    x, y = ring_of("x", "y").gens
    assert basis.generators == (x**2 - y,)


def test_intersect_ideals():
    I = groebner_basis(polys("s"))
    K = groebner_basis(polys("t"))
    meet = intersect_ideals(I, K)
    assert meet.generators == tuple(polys("s*t"))


def test_colon_saturate():
    I = groebner_basis(polys("s*t - s", "t^2 - t"))
    s = polys("s")[0]
    sat = colon_saturate(I, [s])
    assert sat.generators == tuple(polys("t - 1"))
    again = colon_saturate(sat, [s])
    assert again.generators == sat.generators
    assert colon_saturate(groebner_basis(polys("s*t", "s^2")), [s]).is_unit


def test_saturation_by_several_generators():
    # the point (0, 0) and the point (1, 1)
    I = groebner_basis(polys("s*(s - 1)", "t*(t - 1)", "s - t"))
    assert colength(I) == 2
    off = colon_saturate(I, polys("s", "t"))
    assert colength(off) == 1
    assert off.contains(polys("s - 1")[0])
