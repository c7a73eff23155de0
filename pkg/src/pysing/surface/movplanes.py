"""Moving planes, mu-bases and the moving-surface ideal.

A moving plane ``L = (A, B, C, D)`` with coefficients in Q[s, t] follows the
surface when ``A*a + B*b + C*c + D*d`` vanishes identically. The planes that
follow a surface form a free module of rank three; a mu-basis is a basis
``p, q, r`` of it, recognised by ``[p, q, r] = kappa * (a, b, c, d)`` for a
nonzero constant ``kappa``.
"""
import itertools
import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from sympy import QQ

from ..errors import DegreeBoundExhaustedError, DegreeError, InvalidSurfaceError
from ..helper import resolve_config
from ..ideal.groebner import IdealBasis, MonomialOrder, eliminate, groebner_basis
from ..linalg import inverse, nullspace, rank, solve_affine
from ..poly.parser import format_poly, parse_poly
from ..poly.polycore import (AFFINE_PARAMETERS, PARAMETER_VARIABLES, Polynomial, ProjPoint,
                             coerce, common_ring, dehomogenize, homogenize_group, multi_gcd,
                             ring_of, to_fraction, to_qq, to_ring, total_degree, used_variables,
                             variable_names)
from .parametrization import SurfaceParam

logger = logging.getLogger(__name__)


def _affine(f: Polynomial) -> Polynomial:
    if "u" in used_variables(f):
        f = dehomogenize(f, "u")
    return to_ring(f, ring_of(*AFFINE_PARAMETERS))


@dataclass(frozen=True)
class MovingPlane:
    A: Polynomial
    B: Polynomial
    C: Polynomial
    D: Polynomial

    def __post_init__(self):
        for name in "ABCD":
            object.__setattr__(self, name, _affine(getattr(self, name)))

    @classmethod
    def from_strings(cls, texts: Sequence[str]) -> "MovingPlane":
        return cls(*(parse_poly(text, PARAMETER_VARIABLES) for text in texts))

    @property
    def components(self) -> Tuple[Polynomial, ...]:
        return (self.A, self.B, self.C, self.D)

    @property
    def degree(self) -> int:
        return max(total_degree(f) for f in self.components)

    @property
    def is_zero(self) -> bool:
        return not any(self.components)

    def homogeneous(self) -> Tuple[Polynomial, ...]:
        """Components homogenized with u, all padded to the degree of the plane."""
        ring = ring_of(*PARAMETER_VARIABLES)
        k = max(self.degree, 0)
        return tuple(to_ring(homogenize_group(f, AFFINE_PARAMETERS, "u", k), ring) if f else ring.zero
                     for f in self.components)

    def dot(self, X: Sequence) -> Polynomial:
        polys = [x for x in X if isinstance(x, Polynomial)]
        ring = common_ring(self.A, *polys)
        return sum((to_ring(f, ring) * coerce(x, ring) for f, x in zip(self.components, X)), ring.zero)

    def incidence(self, X0: ProjPoint) -> Polynomial:
        """The curve L(s,t,u) . X0 in the parameter plane."""
        ring = ring_of(*PARAMETER_VARIABLES)
        return sum((f.mul_ground(to_qq(x)) for f, x in zip(self.homogeneous(), X0)), ring.zero)

    def shifted(self, monom: Tuple[int, int]) -> "MovingPlane":
        return MovingPlane(*(f.mul_term((monom, QQ.one)) for f in self.components))

    def scaled(self, alpha) -> "MovingPlane":
        alpha = to_qq(alpha)
        return MovingPlane(*(f.mul_ground(alpha) for f in self.components))

    def normalized(self) -> "MovingPlane":
        """Content divided out, integer coefficients without common factor, first leading coefficient positive."""
        if self.is_zero:
            return self
        common = multi_gcd(self.components)
        comps = [f.exquo(common) if f else f for f in self.components] if not common.is_ground else list(self.components)
        return MovingPlane(*comps).primitive()

    def primitive(self) -> "MovingPlane":
        """Scaled to integer coefficients without common factor, first leading coefficient positive."""
        if self.is_zero:
            return self
        coeffs = [to_fraction(c) for f in self.components for c in f.itercoeffs()]
        scale = Fraction(math.lcm(*(c.denominator for c in coeffs)), math.gcd(*(c.numerator for c in coeffs)))
        if next(f for f in self.components if f).LC < 0:
            scale = -scale
        return self.scaled(scale)

    def to_list(self) -> List[str]:
        return [format_poly(f) for f in self.homogeneous()]

    def __str__(self):
        return "(" + ", ".join(self.to_list()) + ")"


@dataclass(frozen=True)
class MuBasis:
    p: MovingPlane
    q: MovingPlane
    r: MovingPlane
    kappa: Fraction
    source: str = "search"

    @property
    def planes(self) -> Tuple[MovingPlane, MovingPlane, MovingPlane]:
        return (self.p, self.q, self.r)

    @property
    def degrees(self) -> Tuple[int, int, int]:
        return tuple(L.degree for L in self.planes)

    def to_dict(self):
        return {
            "p": self.p.to_list(),
            "q": self.q.to_list(),
            "r": self.r.to_list(),
            "kappa": str(self.kappa),
            "degrees": list(self.degrees),
            "source": self.source,
        }


def follows(L: MovingPlane, P: SurfaceParam) -> bool:
    return not L.dot(P.components)


def special_planes(P: SurfaceParam) -> Tuple[MovingPlane, MovingPlane, MovingPlane]:
    a, b, c, d = P.components
    zero = a.ring.zero
    return (MovingPlane(-d, zero, zero, a),
            MovingPlane(zero, -d, zero, b),
            MovingPlane(zero, zero, -d, c))


def _monomials_up_to(k: int) -> List[Tuple[int, int]]:
    return [(i, degree - i) for degree in range(k + 1) for i in range(degree, -1, -1)]


def plane_coordinates(L: MovingPlane, k: int) -> List:
    """Coefficient vector of ``L`` over the unknowns of ``moving_planes_of_degree(P, k)``."""
    if L.degree > k:
        raise DegreeError(f"plane of degree {L.degree} does not fit degree {k}")
    monoms = _monomials_up_to(k)
    vector = []
    for f in L.components:
        vector.extend(f.get(m, QQ.zero) for m in monoms)
    return vector


def _plane_from_vector(vector: Sequence, monoms: Sequence[Tuple[int, int]]) -> MovingPlane:
    ring = ring_of(*AFFINE_PARAMETERS)
    size = len(monoms)
    comps = []
    for j in range(4):
        chunk = vector[j * size:(j + 1) * size]
        comps.append(ring.from_dict({m: QQ.convert(c) for m, c in zip(monoms, chunk) if c}))
    return MovingPlane(*comps)


def _coefficient_system(P: SurfaceParam, k: int, rhs_constant: bool = False):
    """Rows of the linear map (v_j) -> sum v_j * P_j on polynomials of degree at most k."""
    monoms = _monomials_up_to(k)
    images = [P.components[j].mul_term((m, QQ.one)) for j in range(4) for m in monoms]
    targets = sorted({e for f in images for e in f.itermonoms()} | ({(0, 0)} if rhs_constant else set()))
    rows = [[f.get(e, QQ.zero) for f in images] for e in targets]
    return rows, targets, monoms


def moving_planes_of_degree(P: SurfaceParam, k: int) -> List[MovingPlane]:
    """A rational basis of the moving planes of degree at most ``k`` following ``P``."""
    if k < 0:
        raise DegreeError(f"degree must be nonnegative, got {k}")
    rows, _, monoms = _coefficient_system(P, k)
    planes = []
    for vector in nullspace(rows, 4 * len(monoms)):
        planes.append(_plane_from_vector(vector, monoms).primitive())
    logger.debug("degree %d: %d independent moving planes", k, len(planes))
    return planes


def _det3(m) -> Polynomial:
    return (m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]))


def outer_product(p: MovingPlane, q: MovingPlane, r: MovingPlane) -> Tuple[Polynomial, ...]:
    """Signed 3x3 minors of the matrix with rows p, q, r; signs alternate starting with +."""
    rows = [L.components for L in (p, q, r)]
    result = []
    for i in range(4):
        minor = [[row[j] for j in range(4) if j != i] for row in rows]
        det = _det3(minor)
        result.append(det if i % 2 == 0 else -det)
    return tuple(result)


def verify_mu_basis(p: MovingPlane, q: MovingPlane, r: MovingPlane, P: SurfaceParam) -> Optional[Fraction]:
    """kappa with [p, q, r] = kappa * P when p, q, r follow P, else None."""
    if not all(follows(L, P) for L in (p, q, r)):
        return None
    product = outer_product(p, q, r)
    i = next(j for j, f in enumerate(P.components) if f)
    pivot, image = P.components[i], product[i]
    if not image or image.LM != pivot.LM:
        return None
    kappa = image.LC / pivot.LC
    for f, g in zip(P.components, product):
        if g != f.mul_ground(kappa):
            return None
    return to_fraction(kappa)


def _unit_lift(P: SurfaceParam, degree_bound: int) -> Optional[Tuple[Polynomial, ...]]:
    """v with v . P = 1, of the lowest degree up to the bound."""
    for k in range(degree_bound + 1):
        rows, targets, monoms = _coefficient_system(P, k, rhs_constant=True)
        rhs = [QQ.one if e == (0, 0) else QQ.zero for e in targets]
        solution = solve_affine(rows, rhs, 4 * len(monoms))
        if solution is not None:
            return _plane_from_vector(solution, monoms).components
    return None


def unimodular_completion(P: SurfaceParam, degree_bound: int) -> Optional[MuBasis]:
    """Kernel basis from a lift v . P = 1 and a constant functional psi with psi . v constant."""
    v = _unit_lift(P, degree_bound)
    if v is None:
        return None
    monoms = sorted({m for f in v for m in f.itermonoms()})
    v0 = [f.get((0, 0), QQ.zero) for f in v]
    higher = [[f.get(m, QQ.zero) for f in v] for m in monoms if m != (0, 0)]
    psi = next((vec for vec in nullspace(higher, 4) if sum(x * y for x, y in zip(vec, v0))), None)
    if psi is None:
        logger.debug("no constant functional splits the lift %s", [format_poly(f) for f in v])
        return None
    pivot = next(i for i, x in enumerate(psi) if x)
    Psi = [list(psi)] + [[QQ.one if j == i else QQ.zero for j in range(4)] for i in range(4) if i != pivot]
    F = inverse(Psi)
    planes = []
    for col in range(1, 4):
        f = [F[row][col] for row in range(4)]
        pairing = sum((comp.mul_ground(QQ.convert(x)) for comp, x in zip(P.components, f)), P.a.ring.zero)
        comps = [P.a.ring.ground_new(QQ.convert(x)) - pairing * vj for x, vj in zip(f, v)]
        planes.append(MovingPlane(*comps).normalized())
    kappa = verify_mu_basis(*planes, P)
    if kappa is None:
        logger.warning("completion basis failed the outer-product check")
        return None
    return MuBasis(*planes, kappa, "completion")


def _fresh_candidates(P: SurfaceParam, k: int, candidates: Sequence[MovingPlane]) -> List[MovingPlane]:
    """Planes of degree k not in the span of monomial multiples of earlier candidates."""
    ncols = 4 * len(_monomials_up_to(k))
    span = [plane_coordinates(c.shifted(m), k) for c in candidates for m in _monomials_up_to(k - c.degree)]
    current = rank(span, ncols)
    fresh = []
    for L in moving_planes_of_degree(P, k):
        trial = span + [plane_coordinates(L, k)]
        if rank(trial, ncols) > current:
            span, current = trial, current + 1
            fresh.append(L)
    return fresh


def mu_basis(P: SurfaceParam, degree_bound: Optional[int] = None, config=None) -> MuBasis:
    """Searches a verified mu-basis among low-degree moving planes.

    Candidates are collected degree by degree; triples are tried in order of
    total degree. When the surface has no affine base point, a basis built by
    unimodular completion caps the total degree that the search may return
    and is returned when the search finds nothing below it. The search only
    sees the candidate representatives it drew, so on surfaces such as the
    Roman surface, whose bases need planes combining candidates of several
    degrees, the completion (``source == "completion"``) is the basis used;
    the search wins on surfaces like planes whose low-degree candidates
    already form a basis. Raises ``DegreeBoundExhaustedError`` when nothing
    verifies.
    """
    if not isinstance(P, SurfaceParam):
        raise InvalidSurfaceError("mu_basis needs a SurfaceParam")
    config = resolve_config(config)
    if degree_bound is None:
        degree_bound = config["mu_basis"]["degree_bound"]
    if degree_bound is None:
        degree_bound = 2 * P.n
    fallback = unimodular_completion(P, degree_bound)
    limit = sum(fallback.degrees) if fallback is not None else math.inf
    candidates: List[MovingPlane] = []
    tried = 0
    for k in range(degree_bound + 1):
        if k > limit:
            break
        fresh = _fresh_candidates(P, k, candidates)
        if not fresh:
            continue
        start = len(candidates)
        candidates.extend(fresh)
        triples = [t for t in itertools.combinations(range(len(candidates)), 3) if t[-1] >= start]
        triples.sort(key=lambda t: (sum(candidates[i].degree for i in t), t))
        for t in triples:
            if sum(candidates[i].degree for i in t) > limit:
                break
            tried += 1
            kappa = verify_mu_basis(*(candidates[i] for i in t), P)
            if kappa is not None:
                basis = MuBasis(*(candidates[i] for i in t), kappa)
                logger.info("mu-basis of degrees %s, kappa %s", basis.degrees, kappa)
                return basis
    if fallback is not None:
        logger.info("mu-basis from unimodular completion, degrees %s", fallback.degrees)
        return fallback
    raise DegreeBoundExhaustedError(
        f"no verified mu-basis with degrees up to {degree_bound}",
        candidates=[c.to_list() for c in candidates],
        diagnostics={"degree_bound": degree_bound, "candidates": len(candidates), "triples_tried": tried},
    )


def in_moving_surface_ideal(f: Polynomial, mu: MuBasis) -> bool:
    """Membership of a moving surface in <p.X, q.X, r.X> with X = (x, y, z, 1)."""
    ring = ring_of("x", "y", "z", "s", "t")
    for var in ("w", "u"):
        if var in used_variables(f):
            f = dehomogenize(f, var)
    x, y, z = ring.gens[:3]
    gens = [L.dot((x, y, z, 1)) for L in mu.planes]
    basis = groebner_basis(gens, MonomialOrder(variable_names(ring)))
    return basis.contains(to_ring(f, ring))


def in_syzygy_module(L: MovingPlane, mu: MuBasis) -> bool:
    """Whether ``L`` lies in the module generated by the mu-basis."""
    ring = ring_of("x", "y", "z", "w", "s", "t")
    X = ring.gens[:4]
    gens = [M.dot(X) for M in mu.planes]
    gens += [X[i] * X[j] for i in range(4) for j in range(i, 4)]
    basis = groebner_basis(gens, MonomialOrder(variable_names(ring)))
    return basis.contains(L.dot(X))


def moving_surface_ideal(P: SurfaceParam) -> IdealBasis:
    """<d*x - a, d*y - b, d*z - c> with d inverted, intersected with Q[x, y, z, s, t]."""
    ring = ring_of("tau", "x", "y", "z", "s", "t")
    tau, x, y, z = ring.gens[:4]
    a, b, c, d = (to_ring(f, ring) for f in P.components)
    return eliminate([d * x - a, d * y - b, d * z - c, d * tau - 1], ["tau"])
