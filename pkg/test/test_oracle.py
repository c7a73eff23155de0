import pytest

from pysing.poly import ProjPoint, parse_poly
from pysing.surface import (ImplicitSurface, SurfaceParam, base_points, check_implicit_degree,
                            classic_order, implicitize, map_degree, sing_order)


def space(text):
    return parse_poly(text, ("x", "y", "z", "w"))


ROMAN_EQUATION = "x^2*y^2 + x^2*z^2 + y^2*z^2 - x*y*z*w"


@pytest.mark.parametrize("route", ["affine", pytest.param("homogeneous", marks=pytest.mark.slow)])
def test_roman_implicit(roman, route):
    implicit = implicitize(roman, route)
    assert implicit.f == space(ROMAN_EQUATION)
    assert implicit.degree == 4
    assert implicit.euler_holds()
    assert not implicit.reducible


def test_whitney_implicit(whitney):
    implicit = implicitize(whitney)
    assert implicit.f in (space("x^2*w - y^2*z"), space("y^2*z - x^2*w"))
    assert implicit.degree == 3


def test_sphere_and_plane_implicit(sphere, plane):
    assert implicitize(sphere).f == space("x^2 + y^2 + z^2 - w^2")
    assert implicitize(plane).f == space("z - w")


def test_unknown_route(roman):
    with pytest.raises(ValueError):
        implicitize(roman, "resultant")


@pytest.mark.parametrize("coords, r", [
    ((0, 0, 0, 1), 3),
    (("1/3", 0, 0, 1), 2),
    ((1, 1, 1, 3), 1),
    ((1, 1, 1, 1), 0),
])
def test_classic_order_roman(roman, coords, r):
    assert classic_order(implicitize(roman), ProjPoint(coords)) == r


def test_classic_order_matches_parametric_order(whitney, sphere):
    for P, coords in ((whitney, (0, 0, 0, 1)), (whitney, (0, 0, 1, 1)), (sphere, (2, 4, 4, 6))):
        X0 = ProjPoint(coords)
        assert classic_order(implicitize(P), X0) == sing_order(P, X0).r


def test_implicit_surface_helpers():
    S = ImplicitSurface(space("x^2*w - y^2*z"))
    assert S.evaluate((1, 1, 1, 1)) == 0
    assert S.to_dict() == {"f": "-y^2*z + x^2*w", "degree": 3, "reducible": False, "route": "affine"}
    assert ImplicitSurface(space("x^2*w^2 - 2*x*y*w^2 + y^2*w^2")).reducible


def test_degree_consistency(roman, whitney, sphere):
    for P in (roman, whitney, sphere):
        base = base_points(P)
        implicit = implicitize(P)
        check = check_implicit_degree(P, implicit, base=base)
        assert check["consistent"]
        assert check["expected"] == implicit.degree
        assert map_degree(P, implicit, base.lam) == 1


def test_map_degree_two():
    # (s, t) -> (s^2, t, 1, 1) covers the plane z = w twice
    P = SurfaceParam.from_strings(["s^2", "t", "1", "1"])
    implicit = implicitize(P)
    assert implicit.f == space("z - w")
    check = check_implicit_degree(P, implicit)
    assert check["map_degree"] == 2
    assert not check["consistent"]


def test_homogeneous_route_on_a_plane(plane):
    assert implicitize(plane, "homogeneous").f == space("z - w")
