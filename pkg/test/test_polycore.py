from fractions import Fraction

import pytest
from sympy import QQ

from pysing.errors import (DegreeError, InvalidPointError, MissingAssignmentError,
                           NonRationalPointError, PolynomialSyntaxError, UnknownVariableError,
                           ZeroInputError)
from pysing.helper import parse_rational
from pysing.poly import (ProjPoint, dehomogenize, evaluate, format_poly, homogenize,
                         homogenize_group, is_homogeneous, multi_gcd, parse_poly,
                         partial_derivative, poly_arith, primitive_integer, ring_of, substitute, to_ring,
                         total_degree)


def test_parse_and_print():
    f = parse_poly("s^2 + 2*s*t - 3/4", ("s", "t"))
    s, t = ring_of("s", "t").gens
    assert f == s**2 + 2 * s * t - QQ(3, 4)
    assert format_poly(f) == "s^2 + 2*s*t - 3/4"


@pytest.mark.parametrize("text", ["s*t - t^3 + 5", "-(s + t)^2", "1/3*s*u - u^2", "0"])
def test_print_parse_roundtrip(text):
    f = parse_poly(text, ("s", "t", "u"))
    assert parse_poly(format_poly(f), ("s", "t", "u")) == f


def test_canonical_variable_order():
    f = parse_poly("t + x", ("t", "x"))
    assert [str(v) for v in f.ring.symbols] == ["x", "t"]


def test_syntax_error_position():
    with pytest.raises(PolynomialSyntaxError) as info:
        parse_poly("s + * t", ("s", "t"))
    assert info.value.position == 4
    assert info.value.code == "SYNTAX_ERROR"


@pytest.mark.parametrize("text", ["", "s^t", "(s + t", "s / t", "s $ t"])
def test_syntax_errors(text):
    with pytest.raises(PolynomialSyntaxError):
        parse_poly(text, ("s", "t"))


def test_unknown_variable():
    with pytest.raises(UnknownVariableError):
        parse_poly("s + v", ("s", "t"))


def test_homogenize_and_dehomogenize():
    f = parse_poly("s^2 + t + 1", ("s", "t"))
    h = homogenize(f, "u")
    assert h == parse_poly("s^2 + t*u + u^2", ("s", "t", "u"))
    assert is_homogeneous(h)
    assert to_ring(dehomogenize(h, "u"), f.ring) == f
    with pytest.raises(DegreeError):
        homogenize(f, "u", target_degree=1)


def test_homogenize_group_keeps_other_variables():
    f = parse_poly("x*s + y + 1", ("x", "y", "s"))
    h = homogenize_group(f, ("x", "y"), "w")
    assert h == parse_poly("x*s + y + w", ("x", "y", "w", "s"))
    assert is_homogeneous(h, ("x", "y", "w"))
    assert not is_homogeneous(h)


def test_total_degree():
    f = parse_poly("x^2*s^3 + y", ("x", "y", "s"))
    assert total_degree(f) == 5
    assert total_degree(f, ("x", "y")) == 2
    assert total_degree(f.ring.zero) == -1


def test_partial_derivative():
    f = parse_poly("x^3*y + y^2", ("x", "y"))
    assert partial_derivative(f, "x") == parse_poly("3*x^2*y", ("x", "y"))
    assert partial_derivative(f, "x", 4) == 0
    assert partial_derivative(f, "z") == 0


def test_multi_gcd():
    fs = [parse_poly(t, ("s", "t")) for t in ("s^2*t", "2*s*t^2", "0")]
    assert multi_gcd(fs) == parse_poly("s*t", ("s", "t"))
    assert multi_gcd([parse_poly("s", ("s",)), parse_poly("t", ("t",))]).is_ground
    with pytest.raises(ZeroInputError):
        multi_gcd([parse_poly("0", ("s",))])


def test_poly_arith_across_rings():
    f = parse_poly("s + x", ("s", "x"))
    g = parse_poly("t - x", ("t", "x"))
    xst = ("x", "s", "t")
    assert poly_arith("add", f, g) == parse_poly("s + t", xst)
    assert poly_arith("sub", f, g) == parse_poly("s - t + 2*x", xst)
    assert poly_arith("mul", f, g) == parse_poly("s*t - s*x + t*x - x^2", xst)
    assert poly_arith("add", f, 2) == parse_poly("s + x + 2", ("s", "x"))
    assert poly_arith("scalar", f, "1/2") == parse_poly("1/2*s + 1/2*x", ("s", "x"))
    with pytest.raises(ValueError):
        poly_arith("div", f, g)


def test_primitive_integer():
    f = parse_poly("-1/2*x + 3/4*y", ("x", "y"))
    assert primitive_integer(f) == parse_poly("2*x - 3*y", ("x", "y"))


def test_evaluate():
    f = parse_poly("s^2 - t/3", ("s", "t"))
    assert evaluate(f, {"s": "1/2", "t": 3}) == Fraction(-3, 4)
    with pytest.raises(MissingAssignmentError):
        evaluate(f, {"s": 1})


def test_substitute():
    f = parse_poly("x*y - w", ("x", "y", "w"))
    ring = ring_of("s", "t")
    s, t = ring.gens
    assert substitute(f, {"x": s, "y": t, "w": s * t}, ring) == 0


def test_projective_point():
    p = ProjPoint.from_strings(["0", "2", "4/3", "2"])
    q = ProjPoint((0, 1, Fraction(2, 3), 1))
    assert p == q and hash(p) == hash(q)
    assert p.pivot_index() == 1
    assert p.scaled(-3) == p
    assert p.to_list() == ["0", "2", "4/3", "2"]
    with pytest.raises(InvalidPointError):
        ProjPoint((0, 0, 0, 0))
    with pytest.raises(InvalidPointError):
        p.scaled(0)


@pytest.mark.parametrize("text", ["1.5", "x", "1/0"])
def test_rational_parsing_rejects(text):
    with pytest.raises(NonRationalPointError):
        parse_rational(text)
