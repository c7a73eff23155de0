"""Rational parametric surfaces P(s,t) = (a, b, c, d)."""
import logging
from dataclasses import dataclass
from typing import Sequence, Tuple

from ..errors import InvalidSurfaceError
from ..poly.parser import format_poly, parse_poly
from ..poly.polycore import (AFFINE_PARAMETERS, PARAMETER_VARIABLES, Polynomial, dehomogenize,
                             homogenize_group, is_homogeneous, multi_gcd, ring_of, to_ring,
                             total_degree, used_variables)

logger = logging.getLogger(__name__)

COMPONENT_NAMES = ("a", "b", "c", "d")


def _affine_components(polys: Sequence[Polynomial]) -> Tuple[Polynomial, ...]:
    ring = ring_of(*AFFINE_PARAMETERS)
    if any("u" in used_variables(f) for f in polys):
        nonzero = [f for f in polys if f]
        if any(not is_homogeneous(f) for f in nonzero):
            raise InvalidSurfaceError("components using u must be homogeneous in s, t, u")
        if len({total_degree(f) for f in nonzero}) > 1:
            raise InvalidSurfaceError("homogeneous components must share one degree")
        polys = [dehomogenize(to_ring(f, ring_of(*PARAMETER_VARIABLES)), "u") for f in polys]
    try:
        return tuple(to_ring(f, ring) for f in polys)
    except ValueError as err:
        raise InvalidSurfaceError(f"surface components must live in s, t (u): {err}")


@dataclass(frozen=True)
class SurfaceParam:
    """Affine form of a rational surface; ``gcd(a, b, c, d) = 1`` is enforced."""
    a: Polynomial
    b: Polynomial
    c: Polynomial
    d: Polynomial

    def __post_init__(self):
        components = _affine_components((self.a, self.b, self.c, self.d))
        for name, f in zip(COMPONENT_NAMES, components):
            object.__setattr__(self, name, f)
        if not any(components):
            raise InvalidSurfaceError("all four components are zero")
        common = multi_gcd(components)
        if not common.is_ground:
            raise InvalidSurfaceError(f"components share the factor {format_poly(common)}")

    @classmethod
    def from_polynomials(cls, polys: Sequence[Polynomial], remove_content: bool = False) -> "SurfaceParam":
        if len(polys) != 4:
            raise InvalidSurfaceError(f"a surface has four components, got {len(polys)}")
        components = _affine_components(polys)
        if remove_content and any(components):
            components, common = divide_content(components)
            if not common.is_ground:
                logger.warning("dividing out common factor %s of the surface components", format_poly(common))
        return cls(*components)

    @classmethod
    def from_strings(cls, texts: Sequence[str], remove_content: bool = False) -> "SurfaceParam":
        return cls.from_polynomials([parse_poly(text, PARAMETER_VARIABLES) for text in texts], remove_content)

    @property
    def components(self) -> Tuple[Polynomial, ...]:
        return (self.a, self.b, self.c, self.d)

    @property
    def n(self) -> int:
        """Degree of the parametrization."""
        return max(total_degree(f) for f in self.components)

    def homogeneous(self) -> Tuple[Polynomial, ...]:
        """Components homogenized with u to the common degree n."""
        ring = ring_of(*PARAMETER_VARIABLES)
        n = self.n
        return tuple(to_ring(homogenize_group(f, AFFINE_PARAMETERS, "u", n), ring) if f else ring.zero
                     for f in self.components)

    def to_dict(self):
        return dict(zip(COMPONENT_NAMES, (format_poly(f) for f in self.homogeneous())))

    def __str__(self):
        return "(" + ", ".join(format_poly(f) for f in self.homogeneous()) + ")"


def divide_content(polys: Sequence[Polynomial]) -> Tuple[Tuple[Polynomial, ...], Polynomial]:
    """Divides the components by their gcd; returns the quotients and the gcd."""
    common = multi_gcd(polys)
    if common.is_ground:
        return tuple(polys), common
    return tuple(f.exquo(common) if f else f for f in polys), common
