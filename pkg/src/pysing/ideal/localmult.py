"""Intersection multiplicities of plane curves.

Local colength by truncation, the multiplicity e(I_p) of an m-primary ideal
through a reduction ideal of two generic combinations or through the
Hilbert-Samuel function, and the total multiplicity of a family of projective
plane curves over all of their common zeros in P^2(C), complex points and
points at infinity included, computed without locating any point.
"""
import itertools
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, List, Mapping, Optional, Sequence, Tuple

from sympy import QQ
from sympy.polys.rings import PolyRing

from ..errors import (CommonComponentError, DegreeError, GenericityError, HilbertUnstableError,
                      InvalidPointError, NonIsolatedError)
from ..helper import draw_coefficients, make_rng, parse_rational, resolve_config
from ..linalg import nullspace, rank
from ..poly.polycore import (PARAMETER_VARIABLES, Polynomial, ProjPoint, dehomogenize, evaluate,
                             is_homogeneous, multi_gcd, polynomial_ring, ring_of, to_qq, to_ring,
                             total_degree, variable_names)
from .groebner import (INFINITE, IdealBasis, MonomialOrder, colength, colon_saturate,
                       groebner_basis, normal_form, standard_monomials)

logger = logging.getLogger(__name__)

CHART_AFFINE = "u=1"
CHART_INFINITY = "s=1,u=0"
CHART_POINT = "(0:1:0)"


class _DrawFailed(Exception):
    pass


@dataclass(frozen=True)
class LocalPoint:
    """Point of the parameter plane together with the chart it is read in."""
    point: ProjPoint
    chart: int = 2

    def __post_init__(self):
        if len(self.point) != 3:
            raise InvalidPointError("parameter-plane points have three coordinates")
        if not self.point[self.chart]:
            raise InvalidPointError(f"coordinate {self.chart} of {self.point} is zero")

    @property
    def chart_variables(self) -> Tuple[str, str]:
        return tuple(v for i, v in enumerate(PARAMETER_VARIABLES) if i != self.chart)

    def affine_coordinates(self) -> Tuple[Fraction, Fraction]:
        pivot = self.point[self.chart]
        return tuple(c / pivot for i, c in enumerate(self.point) if i != self.chart)

    def localize(self, curves: Sequence[Polynomial]) -> List[Polynomial]:
        """Dehomogenizes the curves into this chart."""
        return [dehomogenize(to_ring(f, ring_of(*PARAMETER_VARIABLES)), PARAMETER_VARIABLES[self.chart])
                for f in curves]


@dataclass(frozen=True)
class MultiplicityReport:
    total: int
    per_chart: Dict[str, int]
    draws: Tuple[Tuple[int, int], ...]
    agreement: bool
    truncation_capped: bool = False

    def to_dict(self):
        return {
            "total": self.total,
            "per_chart": dict(self.per_chart),
            "draws": [list(d) for d in self.draws],
            "agreement": self.agreement,
            "truncation_capped": self.truncation_capped,
        }


def _translate(gens: Sequence[Polynomial], p: Sequence, variables: Sequence[str]) -> List[Polynomial]:
    """Moves ``p`` to the origin."""
    ring = ring_of(*variables)
    names = variable_names(ring)
    shift = dict(zip(variables, (to_qq(parse_rational(c)) for c in p)))
    replacements = [(ring.gens[i], ring.gens[i] + shift[name]) for i, name in enumerate(names) if shift[name]]
    moved = [to_ring(g, ring) for g in gens]
    if not replacements:
        return moved
    return [g.compose(replacements) for g in moved]


def _power_of_maximal(ring: PolyRing, n: int) -> List[Polynomial]:
    k = ring.ngens
    exps = [e for e in itertools.product(range(n + 1), repeat=k) if sum(e) == n]
    return [ring.from_dict({e: QQ.one}) for e in exps]


def truncation_cap(gens: Sequence[Polynomial], config: Mapping) -> int:
    product = 1
    for g in gens:
        if g:
            product *= max(total_degree(g), 1)
    return config["truncation"]["factor"] * product + config["truncation"]["offset"]


def _local_colength_at_origin(gens: Sequence[Polynomial], cap: int) -> Tuple[object, bool]:
    gens = [g for g in gens if g]
    if not gens:
        return INFINITE, False
    ring = gens[0].ring
    if any(g.const() for g in gens):
        return 0, False
    order = MonomialOrder(variable_names(ring))
    previous = None
    for n in range(1, cap + 2):
        value = colength(groebner_basis(list(gens) + _power_of_maximal(ring, n), order))
        if previous is not None and value == previous:
            logger.debug("local colength %s stabilized at truncation %d", value, n - 1)
            return value, False
        previous = value
    logger.warning("local colength did not stabilize below truncation %d", cap)
    return INFINITE, True


def local_colength(gens: Sequence[Polynomial], p: Sequence, config: Optional[Mapping] = None,
                   variables: Sequence[str] = ("s", "t")):
    """dim O_p / I O_p, or ``INFINITE`` when I is not m-primary at ``p``."""
    config = resolve_config(config)
    moved = _translate(gens, p, variables)
    value, _ = _local_colength_at_origin(moved, truncation_cap(moved, config))
    return value


def _agreeing(compute: Callable, seed: int, config: Mapping, what: str):
    """Runs ``compute(rng)`` on independent draws until two results agree."""
    retries = config["genericity"]["max_retries"]
    seen = []
    draws = []
    for k in range(2 + retries):
        draws.append((int(seed), k))
        try:
            value = compute(make_rng(seed, k))
        except _DrawFailed:
            value = None
        if value is not None and value in seen:
            return value, tuple(draws)
        if seen:
            logger.warning("%s: generic draws disagree (%s), redrawing", what, seen + [value])
        seen.append(value)
    raise GenericityError(f"{what}: no two of {len(draws)} generic draws agreed: {seen}",
                          draws=draws)


def _generic_pair(gens: Sequence[Polynomial], rng, bound: int) -> Tuple[Polynomial, Polynomial]:
    ring = gens[0].ring
    c1 = draw_coefficients(rng, len(gens), bound)
    c2 = draw_coefficients(rng, len(gens), bound)
    g1 = sum((g.mul_ground(QQ(a)) for a, g in zip(c1, gens)), ring.zero)
    g2 = sum((g.mul_ground(QQ(b)) for b, g in zip(c2, gens)), ring.zero)
    return g1, g2


def reduction_multiplicity(gens: Sequence[Polynomial], p: Sequence, seed: int = 0,
                           config: Optional[Mapping] = None,
                           variables: Sequence[str] = ("s", "t")) -> int:
    """e(I_p, O_p) as the local colength of two generic combinations of ``gens``."""
    config = resolve_config(config)
    moved = [g for g in _translate(gens, p, variables) if g]
    cap = truncation_cap(moved, config)
    own, _ = _local_colength_at_origin(moved, cap)
    if own == INFINITE:
        raise NonIsolatedError(f"the curves share a component through {tuple(p)}")
    if own == 0:
        return 0
    bound = config["genericity"]["coefficient_bound"]

    def compute(rng):
        value, capped = _local_colength_at_origin(_generic_pair(moved, rng, bound), cap)
        if value == INFINITE:
            raise _DrawFailed()
        return value

    value, _ = _agreeing(compute, seed, config, "reduction multiplicity")
    return value


def _ideal_power(gens: Sequence[Polynomial], k: int) -> List[Polynomial]:
    products = set()
    for combo in itertools.combinations_with_replacement(range(len(gens)), k):
        f = gens[0].ring.one
        for i in combo:
            f = f * gens[i]
        products.add(f)
    return sorted(products, key=lambda f: sorted(f.itermonoms()))


def hilbert_multiplicity(gens: Sequence[Polynomial], p: Sequence, config: Optional[Mapping] = None,
                         variables: Sequence[str] = ("s", "t")) -> int:
    """e(I_p) from the second difference of l -> dim O_p / I^(l+1) O_p."""
    config = resolve_config(config)
    moved = [g for g in _translate(gens, p, variables) if g]
    own, _ = _local_colength_at_origin(moved, truncation_cap(moved, config))
    if own == INFINITE:
        raise NonIsolatedError(f"the curves share a component through {tuple(p)}")
    if own == 0:
        return 0
    basis = groebner_basis(moved).generators
    cache: Dict[int, int] = {}

    def samuel(level: int) -> int:
        if level not in cache:
            power = _ideal_power(basis, level + 1)
            value, _ = _local_colength_at_origin(power, truncation_cap(power, config))
            cache[level] = value
        return cache[level]

    def second_difference(level: int) -> int:
        return samuel(level + 2) - 2 * samuel(level + 1) + samuel(level)

    level = config["hilbert"]["start_level"]
    max_level = config["hilbert"]["max_level"]
    current = second_difference(level)
    while level < max_level:
        following = second_difference(level + 1)
        if following == current:
            return current
        level, current = level + 1, following
    raise HilbertUnstableError(f"Hilbert-Samuel second difference not stable up to level {max_level}",
                               last_value=current, max_level=max_level)


def _supported_colength(curves: Sequence[Polynomial], locus: Sequence[Polynomial],
                        pair: Tuple[Polynomial, Polynomial]) -> int:
    if any(c.is_ground for c in curves if c):
        return 0
    G = groebner_basis(list(pair))
    total = colength(G)
    if total == INFINITE:
        raise _DrawFailed()
    if total == 0:
        return 0
    off = colon_saturate(G, locus)
    return total - colength(off)


def _charts(curves: Sequence[Polynomial], locus: Sequence[Polynomial]):
    """Chart pieces: (name, dehomogenized curves, locus generators restricted to the piece)."""
    ring = ring_of(*PARAMETER_VARIABLES)
    s, t, u = ring.gens
    affine = [dehomogenize(f, "u") for f in curves]
    affine_locus = [dehomogenize(f, "u") for f in locus]
    yield CHART_AFFINE, affine, affine_locus
    at_infinity = [dehomogenize(f, "s") for f in curves]
    infinity_locus = [dehomogenize(f, "s") for f in locus] + [dehomogenize(u, "s")]
    yield CHART_INFINITY, at_infinity, infinity_locus
    point = [dehomogenize(f, "t") for f in curves]
    point_locus = [dehomogenize(f, "t") for f in locus] + [dehomogenize(s, "t"), dehomogenize(u, "t")]
    yield CHART_POINT, point, point_locus


def projective_total_multiplicity(curves: Sequence[Polynomial], seed: int = 0,
                                  config: Optional[Mapping] = None,
                                  locus: Optional[Sequence[Polynomial]] = None) -> MultiplicityReport:
    """Sum of e(I_p, O_p) over every common zero p of the curves in P^2(C).

    With ``locus`` the sum runs over the common zeros of the curves lying on
    V(locus) only.
    """
    config = resolve_config(config)
    ring = ring_of(*PARAMETER_VARIABLES)
    curves = [to_ring(f, ring) for f in curves if f]
    if not curves:
        raise CommonComponentError("every curve is identically zero")
    if any(not is_homogeneous(f) for f in curves):
        raise DegreeError("projective curves must be homogeneous in s, t, u")
    charts = (CHART_AFFINE, CHART_INFINITY, CHART_POINT)
    if any(f.is_ground for f in curves):
        return MultiplicityReport(0, {name: 0 for name in charts}, (), True)
    common = multi_gcd(curves)
    if not common.is_ground:
        raise CommonComponentError(f"the curves share the factor {common}")
    locus = curves if locus is None else [to_ring(f, ring) for f in locus if f]
    pieces = list(_charts(curves, locus))
    bound = config["genericity"]["coefficient_bound"]
    origin_point = {"s": 0, "t": 1, "u": 0}
    skip_point = any(evaluate(f, origin_point) for f in curves + locus)

    def compute(rng):
        contributions = []
        for name, chart_curves, chart_locus in pieces:
            if name == CHART_POINT and skip_point:
                contributions.append(0)
                continue
            live = [f for f in chart_curves if f]
            pair = _generic_pair(live, rng, bound)
            contributions.append(_supported_colength(live, chart_locus, pair))
        return tuple(contributions)

    contributions, draws = _agreeing(compute, seed, config, "projective total multiplicity")
    per_chart = dict(zip(charts, contributions))
    report = MultiplicityReport(sum(contributions), per_chart, draws, True)
    logger.debug("projective total %d %s", report.total, per_chart)
    return report


def affine_multiplicity(curves: Sequence[Polynomial], seed: int = 0, config: Optional[Mapping] = None,
                        locus: Optional[Sequence[Polynomial]] = None) -> int:
    """Sum of e(I_p, O_p) over the common zeros p of the curves in the chart u = 1.

    Zeros on u = 0 are never looked at, so curves carrying a spurious power
    of u are counted correctly. With ``locus`` only zeros on V(locus) count.
    """
    config = resolve_config(config)
    ring = ring_of(*PARAMETER_VARIABLES)
    live = [f for f in (dehomogenize(to_ring(f, ring), "u") for f in curves) if f]
    if not live:
        raise CommonComponentError("every curve is identically zero on u = 1")
    if any(f.is_ground for f in live):
        return 0
    common = multi_gcd(live)
    if not common.is_ground:
        raise CommonComponentError(f"the curves share the affine factor {common}")
    locus = live if locus is None else [dehomogenize(to_ring(f, ring), "u") for f in locus if f]
    bound = config["genericity"]["coefficient_bound"]

    def compute(rng):
        return _supported_colength(live, locus, _generic_pair(live, rng, bound))

    value, _ = _agreeing(compute, seed, config, "affine multiplicity")
    logger.debug("affine total %d", value)
    return value


def _minimal_polynomial_degree(basis: IdealBasis, form: Polynomial) -> Tuple[int, int]:
    """Degree of the minimal polynomial of ``form`` on R/I and of its squarefree part."""
    monomials = standard_monomials(basis)
    index = {m: i for i, m in enumerate(monomials)}
    n = len(monomials)

    def coordinates(f):
        vec = [QQ.zero] * n
        for monom, coeff in normal_form(f, basis).iterterms():
            vec[index[monom]] = coeff
        return vec

    vectors = [coordinates(basis.ring.one)]
    power = basis.ring.one
    while True:
        power = normal_form(power * form, basis)
        vectors.append(coordinates(power))
        if rank(vectors, n) < len(vectors):
            break
    k = len(vectors) - 1
    columns = [[vectors[j][i] for j in range(k + 1)] for i in range(n)]
    relation = nullspace(columns, k + 1)[0]
    T = polynomial_ring(("T",))
    mu = T.from_dict({(i,): c for i, c in enumerate(relation) if c})
    squarefree_degree = mu.degree() - mu.gcd(mu.diff(T.gens[0])).degree()
    return mu.degree(), squarefree_degree


def count_distinct_points(basis: IdealBasis, seed: int = 0, draws: int = 2) -> int:
    """Number of distinct complex zeros of a zero-dimensional ideal."""
    if basis.is_unit:
        return 0
    if colength(basis) == INFINITE:
        raise NonIsolatedError("the ideal is not zero-dimensional")
    ring = basis.ring
    best = 0
    for k in range(draws):
        rng = make_rng(seed, 100 + k)
        coeffs = draw_coefficients(rng, ring.ngens, 100)
        form = sum((g.mul_ground(QQ(c)) for c, g in zip(coeffs, ring.gens)), ring.zero)
        _, distinct = _minimal_polynomial_degree(basis, form)
        best = max(best, distinct)
    return best
