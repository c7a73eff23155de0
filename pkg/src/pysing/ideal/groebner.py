"""Groebner bases, normal forms, colength, saturation and elimination.

Bases are computed with Buchberger's algorithm: sugar pair selection, the
Gebauer-Moeller pair update (coprime and chain criteria), then minimalization
and interreduction into the unique reduced basis with monic generators.
"""
import itertools
import logging
import math
from dataclasses import dataclass
from functools import lru_cache
from operator import itemgetter
from typing import Dict, List, Optional, Sequence, Set, Tuple

from sympy.polys.orderings import ProductOrder, grevlex, lex
from sympy.polys.rings import PolyRing

from ..errors import NotGroebnerError
from ..poly.parser import format_poly
from ..poly.polycore import (Polynomial, canonical_variables, common_ring, polynomial_ring,
                             to_ring, variable_names)

logger = logging.getLogger(__name__)

INFINITE = math.inf

AUXILIARY = "tau"


@dataclass(frozen=True)
class MonomialOrder:
    """Monomial order over an ordered tuple of variables.

    ``kind`` is ``"grevlex"``, ``"lex"`` or ``"block"``. A block order compares
    the first ``block_size`` variables by grevlex first and breaks ties by
    grevlex on the remaining ones.
    """
    variables: Tuple[str, ...]
    kind: str = "grevlex"
    block_size: int = 0

    def __post_init__(self):
        if self.kind not in ("grevlex", "lex", "block"):
            raise ValueError(f"Unknown monomial order: {self.kind}")
        if self.kind == "block" and not 0 < self.block_size < len(self.variables):
            raise ValueError(f"block size {self.block_size} out of range for {self.variables}")

    def ring(self) -> PolyRing:
        return _order_ring(self)

    @classmethod
    def graded(cls, names) -> "MonomialOrder":
        return cls(canonical_variables(names))

    @classmethod
    def elimination(cls, drop_vars, keep_vars) -> "MonomialOrder":
        drop = canonical_variables(drop_vars)
        keep = tuple(v for v in canonical_variables(keep_vars) if v not in drop)
        return cls(drop + keep, "block", len(drop))


@lru_cache(maxsize=None)
def _order_ring(order: MonomialOrder) -> PolyRing:
    if order.kind == "grevlex":
        return polynomial_ring(order.variables)
    if order.kind == "lex":
        return polynomial_ring(order.variables, lex)
    k = order.block_size
    block = ProductOrder((grevlex, itemgetter(slice(0, k))), (grevlex, itemgetter(slice(k, None))))
    return polynomial_ring(order.variables, block)


@dataclass(frozen=True)
class IdealBasis:
    generators: Tuple[Polynomial, ...]
    order: MonomialOrder
    is_groebner: bool = False

    @property
    def ring(self) -> PolyRing:
        return self.order.ring()

    @property
    def staircase(self) -> frozenset:
        """Leading exponent tuples of a Groebner basis."""
        if not self.is_groebner:
            return frozenset()
        return frozenset(g.LM for g in self.generators)

    @property
    def is_zero(self) -> bool:
        return not self.generators

    @property
    def is_unit(self) -> bool:
        return any(g.is_ground and g for g in self.generators)

    def contains(self, f: Polynomial) -> bool:
        return not normal_form(f, self)

    def to_list(self) -> List[str]:
        return [format_poly(g) for g in self.generators]

    def __len__(self):
        return len(self.generators)


def s_polynomial(f: Polynomial, g: Polynomial) -> Polynomial:
    R = f.ring
    lcm = R.monomial_lcm(f.LM, g.LM)
    one = R.domain.one
    return (f.mul_term((R.monomial_div(lcm, f.LM), one / f.LC))
            - g.mul_term((R.monomial_div(lcm, g.LM), one / g.LC)))


def _select(G, P, sugar):
    R = G[0].ring

    def key(p):
        lcm = R.monomial_lcm(G[p[0]].LM, G[p[1]].LM)
        return sugar[p], R.order(lcm), p

    return min(P, key=key)


def _pair_sugar(G, degrees, i, j):
    R = G[0].ring
    lcm = R.monomial_lcm(G[i].LM, G[j].LM)
    return max(degrees[i] + sum(lcm) - sum(G[i].LM), degrees[j] + sum(lcm) - sum(G[j].LM))


def _update(G, P, f):
    """Adds ``f`` to ``G`` and updates the pair set with the Gebauer-Moeller criteria."""
    lmf = f.LM
    lmG = [g.LM for g in G]
    R = f.ring
    lcm = R.monomial_lcm
    mul = R.monomial_mul
    div = R.monomial_div
    P = {p for p in P if (not div(lcm(lmG[p[0]], lmG[p[1]]), lmf) or
                          lcm(lmG[p[0]], lmG[p[1]]) == lcm(lmG[p[0]], lmf) or
                          lcm(lmG[p[0]], lmG[p[1]]) == lcm(lmG[p[1]], lmf))}
    lcm_dict: Dict[tuple, List[int]] = {}
    for i in range(len(G)):
        lcm_dict.setdefault(lcm(lmG[i], lmf), []).append(i)
    minimal_lcms = []
    for L in sorted(lcm_dict.keys(), key=R.order):
        if all(not div(L, L_) for L_ in minimal_lcms):
            minimal_lcms.append(L)
    new_pairs = set()
    for L in minimal_lcms:
        if not any(lcm(lmG[i], lmf) == mul(lmG[i], lmf) for i in lcm_dict[L]):
            new_pairs.add((min(lcm_dict[L]), len(G)))
    return G + [f], P | new_pairs


def _minimalize(G):
    R = G[0].ring
    Gmin = []
    for f in sorted(G, key=lambda h: R.order(h.LM)):
        if all(not R.monomial_div(f.LM, g.LM) for g in Gmin):
            Gmin.append(f)
    return Gmin


def _interreduce(G):
    reduced = []
    for i in range(len(G)):
        g = G[i].rem(G[:i] + G[i + 1:])
        reduced.append(g.monic())
    return reduced


def _buchberger(F: List[Polynomial]) -> List[Polynomial]:
    G: List[Polynomial] = []
    degrees: List[int] = []
    P: Set[Tuple[int, int]] = set()
    for f in F:
        G, P = _update(G, P, f.monic())
        degrees.append(max(sum(m) for m in f.itermonoms()))
    sugar = {p: _pair_sugar(G, degrees, *p) for p in P}
    reductions = 0
    while P:
        i, j = _select(G, P, sugar)
        P.remove((i, j))
        r = s_polynomial(G[i], G[j]).rem(G)
        reductions += 1
        if r:
            s = sugar[(i, j)]
            G, P = _update(G, P, r.monic())
            degrees.append(max(s, max(sum(m) for m in r.itermonoms())))
            if r.is_ground:
                return [r.ring.one]
        sugar = {p: sugar[p] if p in sugar else _pair_sugar(G, degrees, *p) for p in P}
    logger.debug("buchberger: %d generators after %d reductions", len(G), reductions)
    return _interreduce(_minimalize(G))


def default_order(gens: Sequence[Polynomial]) -> MonomialOrder:
    return MonomialOrder(variable_names(common_ring(*gens)))


def groebner_basis(gens: Sequence[Polynomial], order: Optional[MonomialOrder] = None) -> IdealBasis:
    """Reduced Groebner basis of the ideal generated by ``gens``.

    The zero ideal gives an empty basis; the generators are sorted by
    increasing leading monomial.
    """
    if order is None:
        order = default_order(gens)
    ring = order.ring()
    F = [to_ring(f, ring) for f in gens]
    F = [f for f in F if f]
    if not F:
        return IdealBasis((), order, True)
    if any(f.is_ground for f in F):
        return IdealBasis((ring.one,), order, True)
    G = _buchberger(F)
    G = sorted(G, key=lambda g: ring.order(g.LM))
    return IdealBasis(tuple(G), order, True)


def is_groebner_basis(basis: IdealBasis) -> bool:
    G = list(basis.generators)
    for f, g in itertools.combinations(G, 2):
        if s_polynomial(f, g).rem(G):
            return False
    return True


def normal_form(f: Polynomial, basis: IdealBasis) -> Polynomial:
    if not basis.is_groebner:
        raise NotGroebnerError("normal form requires a Groebner basis")
    f = to_ring(f, basis.ring)
    if not basis.generators:
        return f
    return f.rem(list(basis.generators))


def _pure_power_bounds(basis: IdealBasis) -> Optional[List[int]]:
    n = basis.ring.ngens
    bounds: List[Optional[int]] = [None] * n
    for lm in basis.staircase:
        support = [i for i, e in enumerate(lm) if e]
        if len(support) == 1:
            i = support[0]
            bounds[i] = lm[i] if bounds[i] is None else min(bounds[i], lm[i])
    if any(b is None for b in bounds):
        return None
    return bounds


def standard_monomials(basis: IdealBasis) -> List[Tuple[int, ...]]:
    """Monomials outside the leading-term staircase (finite case only)."""
    if not basis.is_groebner:
        raise NotGroebnerError("standard monomials require a Groebner basis")
    if basis.is_unit:
        return []
    bounds = _pure_power_bounds(basis)
    if bounds is None:
        raise ValueError("quotient ring is not finite dimensional")
    div = basis.ring.monomial_div
    staircase = list(basis.staircase)
    return [m for m in itertools.product(*(range(b) for b in bounds))
            if all(div(m, lm) is None for lm in staircase)]


def colength(basis: IdealBasis):
    """dim_Q R/I; ``INFINITE`` when some variable has no pure power in the staircase."""
    if not basis.is_groebner:
        raise NotGroebnerError("colength requires a Groebner basis")
    if basis.is_unit:
        return 0
    if _pure_power_bounds(basis) is None:
        return INFINITE
    return len(standard_monomials(basis))


def eliminate(gens: Sequence[Polynomial], drop_vars: Sequence[str]) -> IdealBasis:
    """Groebner basis of ``<gens>`` intersected with the ring of the remaining variables."""
    names = set(variable_names(common_ring(*gens))) | set(drop_vars)
    keep = tuple(v for v in canonical_variables(names) if v not in drop_vars)
    if not keep:
        raise ValueError("cannot eliminate every variable")
    order = MonomialOrder.elimination(drop_vars, keep)
    full = groebner_basis(gens, order)
    drop_idx = range(order.block_size)
    kept = [g for g in full.generators if all(not lm[i] for lm in g.itermonoms() for i in drop_idx)]
    target = MonomialOrder(keep)
    ring = target.ring()
    G = sorted((to_ring(g, ring) for g in kept), key=lambda g: ring.order(g.LM))
    logger.debug("eliminate %s: %d of %d generators survive", ",".join(drop_vars), len(G), len(full))
    return IdealBasis(tuple(G), target, True)


def _in_order(basis: IdealBasis, order: MonomialOrder) -> IdealBasis:
    if basis.order == order:
        return basis
    return groebner_basis(basis.generators, order)


def _with_auxiliary(order: MonomialOrder, extra: Sequence[Polynomial]) -> PolyRing:
    names = set(order.variables) | {AUXILIARY}
    for f in extra:
        names.update(variable_names(f.ring))
    return polynomial_ring(canonical_variables(names))


def unit_ideal(order: MonomialOrder) -> IdealBasis:
    return IdealBasis((order.ring().one,), order, True)


def intersect_ideals(I: IdealBasis, K: IdealBasis) -> IdealBasis:
    """I ∩ K via tau*I + (1 - tau)*K with tau eliminated; result in the order of ``I``."""
    if I.is_unit:
        return groebner_basis(K.generators, I.order)
    if K.is_unit:
        return I
    if I.is_zero or K.is_zero:
        return IdealBasis((), I.order, True)
    ring = _with_auxiliary(I.order, K.generators)
    tau = ring.gens[variable_names(ring).index(AUXILIARY)]
    gens = [tau * to_ring(f, ring) for f in I.generators]
    gens += [(ring.one - tau) * to_ring(g, ring) for g in K.generators]
    meet = eliminate(gens, [AUXILIARY])
    return _in_order(meet, I.order)


def _saturate_element(I: IdealBasis, j: Polynomial) -> IdealBasis:
    ring = _with_auxiliary(I.order, [j])
    tau = ring.gens[variable_names(ring).index(AUXILIARY)]
    gens = [to_ring(f, ring) for f in I.generators] + [ring.one - tau * to_ring(j, ring)]
    sat = eliminate(gens, [AUXILIARY])
    if sat.is_unit:
        return unit_ideal(I.order)
    return _in_order(sat, I.order)


def colon_saturate(I: IdealBasis, J: Sequence[Polynomial]) -> IdealBasis:
    """(I : <J>^infinity), the intersection of the saturations by each generator of J."""
    J = [j for j in J if j]
    if not J or I.is_unit:
        return unit_ideal(I.order)
    if I.is_zero:
        return I
    result = None
    for j in J:
        if j.is_ground:
            sat = I
        else:
            sat = _saturate_element(I, j)
        result = sat if result is None else intersect_ideals(result, sat)
    logger.debug("saturation: %d -> %d generators", len(I), len(result))
    return result
