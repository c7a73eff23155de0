"""Base points and the order of a point on a rational surface.

The order ``r`` of ``X0`` is obtained by counting, with multiplicity, the
parameters ``(s:t:u)`` that the map sends to ``X0``: with a pivot coordinate
``k`` of ``X0`` the three curves ``X0[k]*P[j] - X0[j]*P[k]`` meet in ``r + lambda``
points of P^2(C), where ``lambda`` is the multiplicity of the base locus.
The remaining counts re-derive ``r`` from moving planes, a mu-basis or a
moving surface, which holds on surfaces without base points.
"""
import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Mapping, Optional, Sequence

from ..errors import (CommonComponentError, HypothesisViolatedError, InvalidPointError,
                      NonIsolatedFiberError, NotFollowingError)
from ..helper import resolve_config
from ..ideal.groebner import IdealBasis, MonomialOrder, colon_saturate, groebner_basis
from ..ideal.localmult import (CHART_INFINITY, CHART_POINT, MultiplicityReport, affine_multiplicity,
                               count_distinct_points, projective_total_multiplicity)
from ..poly.parser import format_poly
from ..poly.polycore import (PARAMETER_VARIABLES, SPACE_VARIABLES, Polynomial, ProjPoint,
                             dehomogenize, evaluate, gen, homogenize_group, is_homogeneous, multi_gcd,
                             ring_of, substitute, to_qq, to_ring, used_variables)
from .movplanes import MovingPlane, MuBasis, follows, mu_basis, special_planes
from .parametrization import SurfaceParam

logger = logging.getLogger(__name__)

LAMBDA_NOTES = {
    "abcd": "lambda = sum over base points p of e(<a,b,c,d>_p), counted with multiplicity",
    "abc": "lambda = sum over base points p of e(<a,b,c>_p), counted with multiplicity",
}

STATUS_OK = "OK"
STATUS_VACUOUS = "VACUOUS"


@dataclass(frozen=True)
class BasePointReport:
    lam: int
    base_locus_ideal: IdealBasis
    per_chart: Dict[str, int]
    is_base_point_free: bool
    point_count: int
    lambda_note: str
    multiplicity_report: Optional[MultiplicityReport] = None

    def to_dict(self):
        return {
            "lambda": self.lam,
            "per_chart": dict(self.per_chart),
            "is_base_point_free": self.is_base_point_free,
            "point_count": self.point_count,
            "base_locus_ideal": self.base_locus_ideal.to_list(),
            "lambda_note": self.lambda_note,
        }


@dataclass(frozen=True)
class SingularityReport:
    point: ProjPoint
    r: int
    lambda_used: int
    total_count: int
    pivot_coordinate: int
    multiplicity_report: MultiplicityReport
    curves: tuple = ()
    cross_checks: Dict[str, Any] = field(default_factory=dict)

    def to_dict(self):
        return {
            "point": self.point.to_list(),
            "r": self.r,
            "lambda": self.lambda_used,
            "total_count": self.total_count,
            "pivot": SPACE_VARIABLES[self.pivot_coordinate],
            "curves": [format_poly(f) for f in self.curves],
            "multiplicity": self.multiplicity_report.to_dict(),
            "checks": dict(self.cross_checks),
        }


@dataclass(frozen=True)
class CountCheck:
    """Result of re-deriving the order from another curve system.

    ``count`` is None when the system says nothing about the point.
    """
    name: str
    count: Optional[int]
    expected: Optional[int]
    status: str = STATUS_OK

    @property
    def agrees(self) -> Optional[bool]:
        if self.expected is None or self.count is None:
            return None
        return self.count == self.expected

    def to_dict(self):
        if self.count is None:
            return {"expected": self.expected, "status": self.status}
        return {"count": self.count, "expected": self.expected, "agrees": self.agrees, "status": self.status}


def _as_point(X0) -> ProjPoint:
    point = X0 if isinstance(X0, ProjPoint) else ProjPoint(tuple(X0))
    if len(point) != 4:
        raise InvalidPointError(f"a point of P^3 has four coordinates, got {len(point)}")
    return point


def base_points(P: SurfaceParam, seed: int = 0, config: Optional[Mapping] = None) -> BasePointReport:
    """lambda, the multiplicity of the base locus V(a, b, c, d) in P^2(C)."""
    config = resolve_config(config)
    mode = config["base_points"]["lambda_generators"]
    if mode not in LAMBDA_NOTES:
        raise ValueError(f"Unknown lambda generators: {mode}")
    components = P.homogeneous()
    curves = components if mode == "abcd" else components[:3]
    live = [f for f in curves if f]
    if not any(f.is_ground for f in live) and (len(live) < 2 or not multi_gcd(live).is_ground):
        raise CommonComponentError(f"{mode} share a factor: infinitely many base points")
    report = projective_total_multiplicity(curves, seed, config, locus=components)

    order = MonomialOrder(PARAMETER_VARIABLES)
    locus = groebner_basis(components, order)
    ring = order.ring()
    free = colon_saturate(locus, ring.gens).is_unit
    if free != (report.total == 0):
        logger.warning("lambda %d disagrees with the saturation test (base point free: %s)", report.total, free)
    count = 0 if free else _count_base_points(components, seed)
    logger.info("lambda = %d over %d base point(s)", report.total, count)
    return BasePointReport(report.total, locus, report.per_chart, free, count, LAMBDA_NOTES[mode], report)


def _count_base_points(components: Sequence[Polynomial], seed: int) -> int:
    """Distinct base points over C, chart by chart."""
    ring = ring_of(*PARAMETER_VARIABLES)
    s, t, u = ring.gens
    pieces = [
        ("u", [], ("s", "t")),
        ("s", [u], ("t", "u")),
        ("t", [s, u], ("s", "u")),
    ]
    total = 0
    for var, extra, names in pieces:
        gens = [dehomogenize(f, var) for f in list(components) + extra]
        basis = groebner_basis(gens, MonomialOrder(names))
        total += count_distinct_points(basis, seed)
    return total


def difference_curves(P: SurfaceParam, X0, pivot: Optional[int] = None) -> List[Polynomial]:
    """The curves X0[k]*P[j] - X0[j]*P[k], j != k; identically zero curves are kept."""
    X0 = _as_point(X0)
    k = X0.pivot_index() if pivot is None else pivot
    if not X0[k]:
        raise InvalidPointError(f"pivot coordinate {SPACE_VARIABLES[k]} of {X0} is zero")
    components = P.homogeneous()
    return [components[j].mul_ground(to_qq(X0[k])) - components[k].mul_ground(to_qq(X0[j]))
            for j in range(4) if j != k]


def _isolated(curves: Sequence[Polynomial], what: str) -> List[Polynomial]:
    live = [f for f in curves if f]
    if not live:
        raise NonIsolatedFiberError(f"{what}: every curve vanishes identically")
    if any(f.is_ground for f in live):
        return live
    if len(live) < 2:
        raise NonIsolatedFiberError(f"{what}: a single curve {format_poly(live[0])} is left")
    common = multi_gcd(live)
    if not common.is_ground:
        raise NonIsolatedFiberError(f"{what}: the curves share the component {format_poly(common)}")
    return live


def sing_order(P: SurfaceParam, X0, seed: int = 0, pivot: Optional[int] = None,
               base: Optional[BasePointReport] = None,
               config: Optional[Mapping] = None) -> SingularityReport:
    """Order r of X0: intersection count of the difference curves minus lambda."""
    X0 = _as_point(X0)
    config = resolve_config(config)
    if base is None:
        base = base_points(P, seed, config)
    k = X0.pivot_index() if pivot is None else pivot
    curves = _isolated(difference_curves(P, X0, k), f"fiber over {X0}")
    report = projective_total_multiplicity(curves, seed, config)
    r = report.total - base.lam
    if r < 0:
        logger.warning("count %d at %s is below lambda %d", report.total, X0, base.lam)
    logger.info("order of %s: r = %d (count %d, lambda %d)", X0, r, report.total, base.lam)
    return SingularityReport(X0, r, base.lam, report.total, k, report, tuple(curves))


def implicit_degree(P: SurfaceParam, seed: int = 0, base: Optional[BasePointReport] = None,
                    config: Optional[Mapping] = None) -> int:
    """n^2 - lambda."""
    if base is None:
        base = base_points(P, seed, config)
    return P.n ** 2 - base.lam


def check_implicit_degree(P: SurfaceParam, implicit, seed: int = 0,
                          base: Optional[BasePointReport] = None,
                          config: Optional[Mapping] = None) -> Dict[str, Any]:
    """Compares n^2 - lambda with the degree of the implicit equation."""
    expected = implicit_degree(P, seed, base, config)
    degree = implicit.degree
    map_degree = expected // degree if degree and expected % degree == 0 else None
    if map_degree != 1:
        logger.warning("n^2 - lambda = %d against implicit degree %d", expected, degree)
    return {"expected": expected, "implicit_degree": degree, "map_degree": map_degree,
            "consistent": map_degree == 1}


def _require_base_point_free(P: SurfaceParam, seed: int, base: Optional[BasePointReport], config) -> BasePointReport:
    if base is None:
        base = base_points(P, seed, config)
    if base.lam:
        raise HypothesisViolatedError(f"the surface has base points (lambda = {base.lam})")
    return base


def _expected_order(P, X0, seed, base, expected, config) -> int:
    if expected is not None:
        return expected
    return sing_order(P, X0, seed, base=base, config=config).r


def verify_moving_plane_count(P: SurfaceParam, X0, L: MovingPlane, seed: int = 0,
                              base: Optional[BasePointReport] = None, expected: Optional[int] = None,
                              config: Optional[Mapping] = None) -> CountCheck:
    """Count of the difference curves together with L(s,t,u) . X0."""
    X0 = _as_point(X0)
    base = _require_base_point_free(P, seed, base, config)
    if not follows(L, P):
        raise NotFollowingError(f"the plane {L} does not follow the surface")
    expected = _expected_order(P, X0, seed, base, expected, config)
    fourth = L.normalized().incidence(X0)
    curves = _isolated(difference_curves(P, X0) + [fourth], f"fiber over {X0}")
    count = projective_total_multiplicity(curves, seed, config).total
    return CountCheck("moving_plane", count, expected, STATUS_OK if fourth else STATUS_VACUOUS)


RECHARTS = {
    CHART_INFINITY: ({"s": "u", "u": "s"}, ("s",)),
    CHART_POINT: ({"t": "u", "u": "t"}, ("s", "t")),
}


def recharted(P: SurfaceParam, chart: str) -> SurfaceParam:
    """P with two parameters swapped so that its points on ``chart`` land on u = 1.

    ``CHART_INFINITY`` gives P(u, t, s), sending (1:t:0) to (0:t:1);
    ``CHART_POINT`` gives P(s, u, t), sending (0:1:0) to (0:0:1).
    """
    ring = ring_of(*PARAMETER_VARIABLES)
    swap, _ = RECHARTS[chart]
    mapping = {name: gen(ring, image) for name, image in swap.items()}
    return SurfaceParam.from_polynomials([substitute(f, mapping, ring) for f in P.homogeneous()])


def fiber_charts_at_infinity(P: SurfaceParam, X0) -> List[str]:
    """Charts of the line u = 0 that the fiber over X0 meets."""
    curves = difference_curves(P, X0)
    on_line = [dehomogenize(dehomogenize(f, "u", 0), "s") for f in curves]
    live = [f for f in on_line if f]
    charts = []
    if not live or not multi_gcd(live).is_ground:
        charts.append(CHART_INFINITY)
    if not any(evaluate(f, {"s": 0, "t": 1, "u": 0}) for f in curves):
        charts.append(CHART_POINT)
    return charts


def _incidence_on_chart(mu: MuBasis, X0: ProjPoint, seed: int, config, locus, what: str):
    """Affine count of the incidence curves of ``mu``; also whether a curve vanished."""
    incidence = [L.normalized().incidence(X0) for L in mu.planes]
    live = [f for f in incidence if f]
    if not live:
        raise NonIsolatedFiberError(f"{what}: every curve vanishes identically")
    try:
        count = affine_multiplicity(live, seed, config, locus)
    except CommonComponentError as err:
        raise NonIsolatedFiberError(f"{what}: {err.message}") from err
    return count, len(live) < len(incidence)


def mu_basis_order(P: SurfaceParam, X0, mu: MuBasis, seed: int = 0,
                   base: Optional[BasePointReport] = None, expected: Optional[int] = None,
                   config: Optional[Mapping] = None,
                   chart_bases: Optional[Dict[str, MuBasis]] = None) -> CountCheck:
    """Count of the incidence curves p.X0, q.X0, r.X0 of a mu-basis.

    The mu-basis lives over the affine chart. When the degrees of its planes
    add up to more than n, the homogenized curves pick up zeros on u = 0
    that are not in the fiber; the affine zeros are then counted alone and
    the fiber points on u = 0 are counted with mu-bases of the recharted
    surfaces, each over its own affine chart. ``chart_bases`` caches those
    mu-bases by chart.
    """
    X0 = _as_point(X0)
    config = resolve_config(config)
    base = _require_base_point_free(P, seed, base, config)
    expected = _expected_order(P, X0, seed, base, expected, config)
    what = f"mu-basis incidence at {X0}"
    excess = sum(L.degree for L in mu.planes) - P.n
    if excess <= 0:
        incidence = [L.normalized().incidence(X0) for L in mu.planes]
        live = [f for f in incidence if f]
        count = projective_total_multiplicity(_isolated(live, what), seed, config).total
        status = STATUS_OK if len(live) == len(incidence) else STATUS_VACUOUS
        return CountCheck("mu_basis", count, expected, status)

    count, dropped = _incidence_on_chart(mu, X0, seed, config, None, what)
    ring = ring_of(*PARAMETER_VARIABLES)
    chart_bases = {} if chart_bases is None else chart_bases
    for chart in fiber_charts_at_infinity(P, X0):
        if chart not in chart_bases:
            chart_bases[chart] = mu_basis(recharted(P, chart), config=config)
        locus = [gen(ring, name) for name in RECHARTS[chart][1]]
        part, vanished = _incidence_on_chart(chart_bases[chart], X0, seed, config, locus, f"{what} ({chart})")
        logger.debug("mu-basis count on %s at %s: %d", chart, X0, part)
        count += part
        dropped = dropped or vanished
    return CountCheck("mu_basis", count, expected, STATUS_VACUOUS if dropped else STATUS_OK)


def _as_moving_surface(f: Polynomial) -> Polynomial:
    """f homogeneous in x, y, z, w (w = 1 first when it is not)."""
    if f and not is_homogeneous(f, SPACE_VARIABLES):
        f = dehomogenize(f, "w")
        f = homogenize_group(f, ("x", "y", "z"), "w")
    return f


def _check_following_surface(f: Polynomial, P: SurfaceParam):
    affine = dehomogenize(f, "u") if "u" in used_variables(f) else f
    ring = ring_of("s", "t")
    image = substitute(affine, dict(zip(SPACE_VARIABLES, P.components)), ring)
    if image:
        raise NotFollowingError(f"moving surface {format_poly(f)} leaves residual {format_poly(image)}")


def verify_moving_surface_count(P: SurfaceParam, X0, f: Polynomial, seed: int = 0,
                                base: Optional[BasePointReport] = None, expected: Optional[int] = None,
                                config: Optional[Mapping] = None) -> CountCheck:
    """Count of the difference curves together with f(X0; s, t, u)."""
    X0 = _as_point(X0)
    base = _require_base_point_free(P, seed, base, config)
    f = _as_moving_surface(f)
    _check_following_surface(f, P)
    expected = _expected_order(P, X0, seed, base, expected, config)
    ring = ring_of(*PARAMETER_VARIABLES)
    fourth = substitute(f, dict(zip(SPACE_VARIABLES, X0)), ring)
    if fourth and not is_homogeneous(fourth):
        fourth = to_ring(homogenize_group(fourth, ("s", "t"), "u"), ring)
    curves = _isolated(difference_curves(P, X0) + [fourth], f"fiber over {X0}")
    count = projective_total_multiplicity(curves, seed, config).total
    return CountCheck("moving_surface", count, expected, STATUS_OK if fourth else STATUS_VACUOUS)


def combined_planes_order(P: SurfaceParam, X0, mu: MuBasis, seed: int = 0,
                          base: Optional[BasePointReport] = None, expected: Optional[int] = None,
                          config: Optional[Mapping] = None) -> CountCheck:
    """Count of L1.X0, L2.X0, L3.X0 together with the mu-basis incidence curves.

    With w0 != 0 the curves Li.X0 are the fiber curves of the pivot w and the
    mu-basis curves lie in their local ideal at every fiber point, so the
    count is r. With w0 = 0 every Li.X0 is a multiple of d and the system
    also vanishes on d = 0; the check is reported VACUOUS without a count.
    """
    X0 = _as_point(X0)
    base = _require_base_point_free(P, seed, base, config)
    expected = _expected_order(P, X0, seed, base, expected, config)
    if not X0[3]:
        return CountCheck("combined_planes", None, expected, STATUS_VACUOUS)
    planes = list(special_planes(P)) + [L.normalized() for L in mu.planes]
    curves = _isolated([L.incidence(X0) for L in planes], f"six-curve system at {X0}")
    count = projective_total_multiplicity(curves, seed, config).total
    return CountCheck("combined_planes", count, expected)
