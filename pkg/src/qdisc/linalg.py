"""Exact Gaussian elimination over the scalar field Q(s)."""

from __future__ import annotations

from .scalar import Scalar, ZERO, ONE


def row_echelon(rows: list[list[Scalar]]) -> tuple[int, list[list[Scalar]], list[int]]:
    """Reduce a copy; returns (rank, reduced rows, pivot column indices)."""
    m = [list(r) for r in rows]
    if not m:
        return 0, [], []
    ncols = len(m[0])
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][col]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = m[r][col].inverse()
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][col]:
                f = m[i][col]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(col)
        r += 1
        if r == len(m):
            break
    return r, m, pivots


def rank(rows: list[list[Scalar]]) -> int:
    return row_echelon(rows)[0]


def nullspace(rows: list[list[Scalar]], ncols: int) -> list[list[Scalar]]:
    """Basis of the right kernel of the matrix given by rows."""
    if not rows:
        return [[ONE if i == j else ZERO for i in range(ncols)]
                for j in range(ncols)]
    r, m, pivots = row_echelon(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [ZERO] * ncols
        v[fc] = ONE
        for row_i, pc in enumerate(pivots):
            v[pc] = -m[row_i][fc]
        basis.append(v)
    return basis


def nullspace_dim(rows: list[list[Scalar]], ncols: int) -> int:
    if not rows:
        return ncols
    return ncols - row_echelon(rows)[0]
