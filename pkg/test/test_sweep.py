"""Random base-point-free quadratic surfaces: parametric order against the implicit equation."""
import numpy as np
import pytest

from pysing.errors import DegreeBoundExhaustedError
from pysing.helper import draw_rationals
from pysing.poly import ProjPoint, evaluate, parse_poly
from pysing.surface import (SurfaceParam, base_points, check_implicit_degree, classic_order,
                            implicitize, mu_basis, mu_basis_order, sing_order, special_planes,
                            verify_moving_plane_count, verify_moving_surface_count)

QUADRATIC_MONOMIALS = ("s^2", "s*t", "t^2", "s*u", "t*u", "u^2")
SPACE = ("x", "y", "z", "w", "s", "t", "u")


def random_surface(rng):
    """A degree-2 surface without base points whose map is birational onto its image."""
    while True:
        texts = []
        for _ in range(4):
            coeffs = rng.integers(-3, 4, size=len(QUADRATIC_MONOMIALS))
            texts.append(" + ".join(f"({int(c)})*{m}" for c, m in zip(coeffs, QUADRATIC_MONOMIALS)))
        try:
            P = SurfaceParam.from_strings(texts)
        except ValueError:
            continue
        if P.n != 2 or base_points(P).lam:
            continue
        implicit = implicitize(P)
        if check_implicit_degree(P, implicit)["consistent"]:
            return P, implicit


def battery(P, rng):
    points = []
    for s, t in (draw_rationals(rng, 2, 5) for _ in range(2)):
        values = [evaluate(f, {"s": s, "t": t, "u": 1}) for f in P.homogeneous()]
        if any(values):
            points.append(ProjPoint(tuple(values)))
    points.append(ProjPoint(tuple(draw_rationals(rng, 3, 7)) + (1,)))
    return points


def zd_minus_wc(P):
    components = P.to_dict()
    return parse_poly(f"z*({components['d']}) - w*({components['c']})", SPACE)


def sweep(count, seed):
    rng = np.random.default_rng(seed)
    for _ in range(count):
        P, implicit = random_surface(rng)
        base = base_points(P)
        L3 = special_planes(P)[2]
        try:
            mu = mu_basis(P)
        except DegreeBoundExhaustedError:
            mu = None
        chart_bases = {}
        for X0 in battery(P, rng):
            r = sing_order(P, X0, base=base).r
            assert r == classic_order(implicit, X0)
            assert sing_order(P, X0, seed=1, base=base).r == r
            assert verify_moving_plane_count(P, X0, L3, base=base, expected=r).agrees
            assert verify_moving_surface_count(P, X0, zd_minus_wc(P), base=base, expected=r).agrees
            if mu is None:
                continue
            counts = {mu_basis_order(P, X0, mu, seed=s, base=base, expected=r, chart_bases=chart_bases).count
                      for s in (0, 1)}
            assert counts == {r}


def test_small_sweep():
    sweep(2, 11)


@pytest.mark.slow
def test_full_sweep():
    sweep(10, 12)
