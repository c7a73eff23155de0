"""Exact linear algebra over QQ on top of sympy's DomainMatrix."""
from typing import List, Optional, Sequence

from sympy import QQ
from sympy.polys.matrices import DomainMatrix


def rational_matrix(rows: Sequence[Sequence], ncols: int) -> DomainMatrix:
    data = [[QQ.convert(e) for e in row] for row in rows]
    return DomainMatrix(data, (len(data), ncols), QQ)


def nullspace(rows: Sequence[Sequence], ncols: int) -> List[List]:
    """Basis of {v : M v = 0}, one list per basis vector."""
    if not rows:
        return [[QQ.one if i == j else QQ.zero for j in range(ncols)] for i in range(ncols)]
    null = rational_matrix(rows, ncols).nullspace()
    return null.to_list()


def rank(rows: Sequence[Sequence], ncols: int) -> int:
    if not rows:
        return 0
    return rational_matrix(rows, ncols).rank()


def solve_affine(rows: Sequence[Sequence], rhs: Sequence, ncols: int) -> Optional[List]:
    """One solution of M v = rhs, or None when the system is inconsistent."""
    augmented = [list(row) + [-QQ.convert(b)] for row, b in zip(rows, rhs)]
    for vector in nullspace(augmented, ncols + 1):
        last = vector[-1]
        if last:
            return [QQ.convert(e) / last for e in vector[:-1]]
    return None


def inverse(rows: Sequence[Sequence]) -> List[List]:
    n = len(rows)
    return rational_matrix(rows, n).inv().to_list()
