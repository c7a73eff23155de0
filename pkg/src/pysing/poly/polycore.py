"""Exact sparse multivariate polynomials over the rationals.

Polynomials are ``sympy`` sparse ring elements (``PolyElement``) over ``QQ``.
A ring is identified by an ordered tuple of variable names; the storage and
printing order is graded reverse lexicographic with ``x > y > z > w > s > t > u``.
The internal auxiliary variable ``tau`` is placed in front of every other
variable when a computation needs it.
"""
import logging
import numbers
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, Mapping, Optional, Sequence, Tuple, Union

from sympy import QQ
from sympy.polys.orderings import grevlex
from sympy.polys.rings import PolyElement, PolyRing

from ..errors import (DegreeError, InvalidPointError, MissingAssignmentError,
                      UnknownVariableError, ZeroInputError)
from ..helper import format_rational, parse_rational

logger = logging.getLogger(__name__)

Polynomial = PolyElement
Rational = Union[int, Fraction]

CANONICAL_VARIABLES = ("tau", "x", "y", "z", "w", "s", "t", "u")
SPACE_VARIABLES = ("x", "y", "z", "w")
PARAMETER_VARIABLES = ("s", "t", "u")
AFFINE_PARAMETERS = ("s", "t")


@lru_cache(maxsize=None)
def polynomial_ring(variables: Tuple[str, ...], order=grevlex) -> PolyRing:
    return PolyRing(list(variables), QQ, order)


def canonical_variables(names: Iterable[str]) -> Tuple[str, ...]:
    names = set(names)
    unknown = names.difference(CANONICAL_VARIABLES)
    if unknown:
        raise UnknownVariableError(f"unknown variable(s): {', '.join(sorted(unknown))}")
    return tuple(v for v in CANONICAL_VARIABLES if v in names)


def ring_of(*names: str) -> PolyRing:
    return polynomial_ring(canonical_variables(names))


def variable_names(ring: PolyRing) -> Tuple[str, ...]:
    return tuple(str(symbol) for symbol in ring.symbols)


def var_index(ring: PolyRing, name: str) -> int:
    names = variable_names(ring)
    if name not in names:
        raise UnknownVariableError(f"variable {name!r} not in ring ({', '.join(names)})")
    return names.index(name)


def gen(ring: PolyRing, name: str) -> Polynomial:
    return ring.gens[var_index(ring, name)]


def used_variables(f: Polynomial) -> Tuple[str, ...]:
    names = variable_names(f.ring)
    used = set()
    for monom in f.itermonoms():
        used.update(name for name, e in zip(names, monom) if e)
    return tuple(name for name in names if name in used)


def to_qq(value):
    if isinstance(value, numbers.Integral):
        return QQ(int(value))
    if isinstance(value, (Fraction, str)):
        value = parse_rational(value)
        return QQ(value.numerator, value.denominator)
    return QQ.convert(value)


def to_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    return Fraction(int(value.numerator), int(value.denominator))


def to_ring(f: Polynomial, ring: PolyRing) -> Polynomial:
    """Moves ``f`` into ``ring`` by variable name."""
    if f.ring == ring:
        return f
    target = variable_names(ring)
    positions = [target.index(name) if name in target else None for name in variable_names(f.ring)]
    terms = {}
    for monom, coeff in f.iterterms():
        exps = [0] * ring.ngens
        for pos, e in zip(positions, monom):
            if not e:
                continue
            if pos is None:
                raise UnknownVariableError(
                    f"cannot move {f} into a ring over ({', '.join(target)})")
            exps[pos] = e
        terms[tuple(exps)] = coeff
    return ring.from_dict(terms)


def common_ring(*polys: Polynomial) -> PolyRing:
    names = set()
    for f in polys:
        names.update(variable_names(f.ring))
    return ring_of(*names)


def coerce(value, ring: PolyRing) -> Polynomial:
    if isinstance(value, PolyElement):
        return to_ring(value, ring)
    return ring.ground_new(to_qq(value))


def poly_arith(op: str, f: Polynomial, g) -> Polynomial:
    if op == "scalar":
        return f.mul_ground(to_qq(g))
    if isinstance(g, PolyElement):
        ring = common_ring(f, g)
    else:
        ring = f.ring
    f, g = to_ring(f, ring), coerce(g, ring)
    if op == "add":
        return f + g
    if op == "sub":
        return f - g
    if op == "mul":
        return f * g
    raise ValueError(f"Unknown polynomial operation: {op}")


def partial_derivative(f: Polynomial, v: str, order: int = 1) -> Polynomial:
    if order < 1:
        raise ValueError(f"derivative order must be positive, got {order}")
    names = variable_names(f.ring)
    if v not in names:
        return f.ring.zero
    x = f.ring.gens[names.index(v)]
    for _ in range(order):
        f = f.diff(x)
        if not f:
            break
    return f


def total_degree(f: Polynomial, group: Optional[Sequence[str]] = None) -> int:
    """Total degree in ``group`` (all variables by default); -1 for zero."""
    if not f:
        return -1
    names = variable_names(f.ring)
    mask = [group is None or name in group for name in names]
    return max(sum(e for e, keep in zip(monom, mask) if keep) for monom in f.itermonoms())


def is_homogeneous(f: Polynomial, group: Optional[Sequence[str]] = None) -> bool:
    if not f:
        return True
    names = variable_names(f.ring)
    mask = [group is None or name in group for name in names]
    degrees = {sum(e for e, keep in zip(monom, mask) if keep) for monom in f.itermonoms()}
    return len(degrees) == 1


def homogenize_group(f: Polynomial, group: Sequence[str], new_var: str,
                     target_degree: Optional[int] = None) -> Polynomial:
    """Homogenizes ``f`` with respect to ``group`` using ``new_var``."""
    ring = ring_of(*(set(variable_names(f.ring)) | {new_var}))
    f = to_ring(f, ring)
    names = variable_names(ring)
    group = set(group) | {new_var}
    mask = [name in group for name in names]
    h = names.index(new_var)
    degree = total_degree(f, tuple(group))
    if target_degree is None:
        target_degree = max(degree, 0)
    elif target_degree < degree:
        raise DegreeError(f"target degree {target_degree} below degree {degree} of {f}")
    terms = {}
    for monom, coeff in f.iterterms():
        exps = list(monom)
        exps[h] += target_degree - sum(e for e, keep in zip(monom, mask) if keep)
        terms[tuple(exps)] = coeff
    return ring.from_dict(terms)


def homogenize(f: Polynomial, new_var: str, target_degree: Optional[int] = None) -> Polynomial:
    group = [name for name in variable_names(f.ring) if name != new_var]
    return homogenize_group(f, group, new_var, target_degree)


def dehomogenize(f: Polynomial, var: str, value: Rational = 1) -> Polynomial:
    """Substitutes ``var = value`` and drops ``var`` from the ring."""
    names = variable_names(f.ring)
    if var not in names:
        return f
    i = names.index(var)
    rest = [name for name in names if name != var]
    if not rest:
        return f.ring.ground_new(to_qq(evaluate(f, {var: value})))
    ring = ring_of(*rest)
    v = to_qq(value)
    acc: Dict[Tuple[int, ...], object] = defaultdict(lambda: QQ.zero)
    for monom, coeff in f.iterterms():
        key = monom[:i] + monom[i + 1:]
        acc[key] += coeff * v ** monom[i]
    reduced = {key: c for key, c in acc.items() if c}
    return to_ring(polynomial_ring(tuple(rest)).from_dict(reduced), ring)


def multi_gcd(fs: Sequence[Polynomial]) -> Polynomial:
    nonzero = [f for f in fs if f]
    if not nonzero:
        raise ZeroInputError("gcd of zero polynomials is undefined")
    ring = common_ring(*fs)
    g = ring.zero
    for f in nonzero:
        g = g.gcd(to_ring(f, ring))
        if g.is_ground:
            return ring.one
    return g.monic()


def primitive_integer(f: Polynomial) -> Polynomial:
    """Integer-primitive associate of ``f`` with positive leading coefficient."""
    if not f:
        return f
    _, f = f.clear_denoms()
    _, f = f.primitive()
    if f.LC < 0:
        f = -f
    return f


def evaluate(f: Polynomial, assignment: Mapping[str, Rational]) -> Fraction:
    names = variable_names(f.ring)
    missing = [name for name in used_variables(f) if name not in assignment]
    if missing:
        raise MissingAssignmentError(f"no value for {', '.join(missing)} in {f}")
    values = [parse_rational(assignment[name]) if name in assignment else None for name in names]
    total = Fraction(0)
    for monom, coeff in f.iterterms():
        term = to_fraction(coeff)
        for value, e in zip(values, monom):
            if e:
                term *= value ** e
        total += term
    return total


def substitute(f: Polynomial, mapping: Mapping[str, object], ring: PolyRing) -> Polynomial:
    """Simultaneously replaces variables of ``f`` by polynomials of ``ring``."""
    names = variable_names(f.ring)
    images = []
    for name in names:
        if name in mapping:
            images.append(coerce(mapping[name], ring))
        elif name in variable_names(ring):
            images.append(gen(ring, name))
        else:
            images.append(None)
    powers: Dict[Tuple[int, int], Polynomial] = {}
    result = ring.zero
    for monom, coeff in f.iterterms():
        term = ring.ground_new(coeff)
        for i, e in enumerate(monom):
            if not e:
                continue
            if images[i] is None:
                raise UnknownVariableError(f"no image for variable {names[i]!r}")
            if (i, e) not in powers:
                powers[(i, e)] = images[i] ** e
            term = term * powers[(i, e)]
        result += term
    return result


@dataclass(frozen=True, eq=False)
class ProjPoint:
    """Point of projective space with exact rational homogeneous coordinates.

    Two points compare equal when their coordinate tuples are proportional.
    """
    coords: Tuple[Fraction, ...]

    def __post_init__(self):
        coords = tuple(parse_rational(c) for c in self.coords)
        if not any(coords):
            raise InvalidPointError("a projective point needs a nonzero coordinate")
        object.__setattr__(self, "coords", coords)

    @classmethod
    def from_strings(cls, texts: Sequence[str]) -> "ProjPoint":
        return cls(tuple(parse_rational(text) for text in texts))

    def __len__(self):
        return len(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def pivot_index(self) -> int:
        return next(i for i, c in enumerate(self.coords) if c)

    def normalized(self) -> Tuple[Fraction, ...]:
        pivot = self.coords[self.pivot_index()]
        return tuple(c / pivot for c in self.coords)

    def scaled(self, alpha: Rational) -> "ProjPoint":
        alpha = parse_rational(alpha)
        if not alpha:
            raise InvalidPointError("cannot scale a projective point by zero")
        return ProjPoint(tuple(alpha * c for c in self.coords))

    def __eq__(self, other):
        if not isinstance(other, ProjPoint):
            return NotImplemented
        return len(self) == len(other) and self.normalized() == other.normalized()

    def __hash__(self):
        return hash(self.normalized())

    def to_list(self):
        return [format_rational(c) for c in self.coords]

    def __str__(self):
        return "(" + ", ".join(self.to_list()) + ")"
