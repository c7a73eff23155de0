"""Implicit equations by elimination and the order of a point by derivatives."""
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from ..errors import EliminationNotPrincipalError
from ..ideal.groebner import IdealBasis, MonomialOrder, colon_saturate, eliminate
from ..poly.parser import format_poly
from ..poly.polycore import (PARAMETER_VARIABLES, SPACE_VARIABLES, Polynomial, ProjPoint,
                             evaluate, homogenize_group, is_homogeneous, partial_derivative,
                             primitive_integer, ring_of, substitute, to_ring, total_degree,
                             variable_names)
from .parametrization import SurfaceParam

logger = logging.getLogger(__name__)

ROUTES = ("affine", "homogeneous")


@dataclass(frozen=True)
class ImplicitSurface:
    """Homogeneous implicit equation f(x, y, z, w) = 0 of a surface."""
    f: Polynomial
    route: str = "affine"

    def __post_init__(self):
        object.__setattr__(self, "f", to_ring(self.f, ring_of(*SPACE_VARIABLES)))

    @property
    def degree(self) -> int:
        return total_degree(self.f)

    @property
    def reducible(self) -> bool:
        """True when f shares a factor with one of its partial derivatives."""
        for v in SPACE_VARIABLES:
            fv = partial_derivative(self.f, v)
            if fv and not self.f.gcd(fv).is_ground:
                return True
        return False

    def evaluate(self, X0) -> Fraction:
        return evaluate(self.f, dict(zip(SPACE_VARIABLES, X0)))

    def euler_holds(self) -> bool:
        ring = self.f.ring
        lhs = sum((g * partial_derivative(self.f, v) for g, v in zip(ring.gens, SPACE_VARIABLES)), ring.zero)
        return lhs == self.f.mul_ground(self.degree)

    def to_dict(self):
        return {"f": format_poly(self.f), "degree": self.degree, "reducible": self.reducible,
                "route": self.route}

    def __str__(self):
        return format_poly(self.f)


def _principal(basis: IdealBasis, route: str) -> Polynomial:
    if len(basis.generators) != 1:
        raise EliminationNotPrincipalError(
            f"{route} elimination left {len(basis.generators)} generators: {basis.to_list()}")
    return basis.generators[0]


def _affine_implicit(P: SurfaceParam) -> Polynomial:
    ring = ring_of("tau", "x", "y", "z", "s", "t")
    tau, x, y, z = ring.gens[:4]
    a, b, c, d = (to_ring(f, ring) for f in P.components)
    basis = eliminate([d * x - a, d * y - b, d * z - c, d * tau - 1], ["tau", "s", "t"])
    f = _principal(basis, "affine")
    return homogenize_group(f, ("x", "y", "z"), "w")


def _homogeneous_implicit(P: SurfaceParam) -> Polynomial:
    ring = ring_of("x", "y", "z", "w", "s", "t", "u")
    X = ring.gens[:4]
    Ph = [to_ring(f, ring) for f in P.homogeneous()]
    minors = [X[i] * Ph[j] - X[j] * Ph[i] for i in range(4) for j in range(i + 1, 4)]
    minors = [m for m in minors if m]
    order = MonomialOrder(variable_names(ring))
    saturated = colon_saturate(IdealBasis(tuple(minors), order), [f for f in Ph if f])
    basis = eliminate(saturated.generators, PARAMETER_VARIABLES)
    return _principal(basis, "homogeneous")


def implicitize(P: SurfaceParam, route: str = "affine") -> ImplicitSurface:
    """The implicit equation, content- and sign-normalized and checked by substitution."""
    if route not in ROUTES:
        raise ValueError(f"Unknown implicitization route: {route}")
    f = _affine_implicit(P) if route == "affine" else _homogeneous_implicit(P)
    f = primitive_integer(to_ring(f, ring_of(*SPACE_VARIABLES)))
    image = substitute(f, dict(zip(SPACE_VARIABLES, P.homogeneous())), ring_of(*PARAMETER_VARIABLES))
    if image:
        raise EliminationNotPrincipalError(f"{format_poly(f)} does not vanish on the parametrization")
    if not is_homogeneous(f):
        raise EliminationNotPrincipalError(f"implicit equation {format_poly(f)} is not homogeneous")
    surface = ImplicitSurface(f, route)
    logger.info("implicit equation of degree %d via %s route", surface.degree, route)
    return surface


def classic_order(S: ImplicitSurface, X0) -> int:
    """Smallest r such that some r-th partial derivative of f is nonzero at X0."""
    X0 = X0 if isinstance(X0, ProjPoint) else ProjPoint(tuple(X0))
    assignment = dict(zip(SPACE_VARIABLES, X0))
    level = {S.f}
    r = 0
    while level:
        if any(evaluate(g, assignment) for g in level):
            return r
        level = {partial_derivative(g, v) for g in level for v in SPACE_VARIABLES}
        level = {g for g in level if g}
        r += 1
    return r


def map_degree(P: SurfaceParam, implicit: ImplicitSurface, lam: int) -> Optional[int]:
    """(n^2 - lambda) / deg f when the quotient is integral."""
    expected = P.n ** 2 - lam
    if implicit.degree <= 0 or expected % implicit.degree:
        return None
    return expected // implicit.degree
