"""Exact dense linear algebra over Q and over Q(zeta_r).

Plain fraction Gaussian elimination; matrices here are small (at most a few
hundred entries), so clarity wins over fraction-free tricks.
"""

from __future__ import annotations

from fractions import Fraction

from cherednik2.cyclo import CycloNum


def rref(rows: list[list[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form; returns (matrix, pivot column indices)."""
    m = [list(map(Fraction, row)) for row in rows]
    if not m:
        return m, []
    ncols = len(m[0])
    pivots: list[int] = []
    rank = 0
    for col in range(ncols):
        piv = next((i for i in range(rank, len(m)) if m[i][col] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = 1 / m[rank][col]
        m[rank] = [inv * x for x in m[rank]]
        for i in range(len(m)):
            if i != rank and m[i][col] != 0:
                f = m[i][col]
                m[i] = [a - f * b for a, b in zip(m[i], m[rank])]
        pivots.append(col)
        rank += 1
        if rank == len(m):
            break
    return m, pivots


def rational_kernel(rows: list[list[Fraction]], ncols: int) -> list[list[Fraction]]:
    """Basis of the right kernel of the matrix (rows may be empty)."""
    if not rows:
        return [[Fraction(i == j) for j in range(ncols)] for i in range(ncols)]
    m, pivots = rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        vec = [Fraction(0)] * ncols
        vec[fc] = Fraction(1)
        for r_idx, pc in enumerate(pivots):
            vec[pc] = -m[r_idx][fc]
        basis.append(vec)
    return basis


def rational_rank(rows: list[list[Fraction]]) -> int:
    return len(rref(rows)[1])


def cyclo_rank(rows: list[list[CycloNum]], r: int) -> int:
    """Rank of a matrix over Q(zeta_r) by Gaussian elimination in the field."""
    m = [list(row) for row in rows]
    if not m:
        return 0
    ncols = len(m[0])
    rank = 0
    for col in range(ncols):
        piv = next((i for i in range(rank, len(m)) if not m[i][col].is_zero()), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = m[rank][col].inv()
        m[rank] = [inv * x for x in m[rank]]
        for i in range(rank + 1, len(m)):
            if not m[i][col].is_zero():
                f = m[i][col]
                m[i] = [a - f * b for a, b in zip(m[i], m[rank])]
        rank += 1
        if rank == len(m):
            break
    return rank


def in_rational_span(vectors: list[list[Fraction]], target: list[Fraction]) -> bool:
    if not vectors:
        return all(x == 0 for x in target)
    return rational_rank(vectors) == rational_rank(vectors + [target])
