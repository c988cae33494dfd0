"""Exact row reduction over Q and Q(i).

Matrices are lists of rows; entries are any scalars supported by
:mod:`e6quad.scalars`.  Everything here is plain Gauss-Jordan elimination.
"""

from __future__ import annotations

from gmpy2 import mpq

from .scalars import is_zero


def rref(rows, ncols: int | None = None):
    """Reduced row-echelon form.  Returns ``(matrix, pivot_columns)``.

    Zero rows are dropped, so ``len(pivots)`` is the rank.
    """
    m = [list(r) for r in rows]
    if not m:
        return [], []
    ncols = len(m[0]) if ncols is None else ncols
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if not is_zero(m[i][c])), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        p = m[r][c]
        m[r] = [a / p for a in m[r]]
        for i in range(len(m)):
            if i != r and not is_zero(m[i][c]):
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows) -> int:
    return len(rref(rows)[1])


def nullspace(rows, ncols: int | None = None):
    """Basis of ``{v : rows @ v = 0}`` as a list of vectors."""
    if ncols is None:
        ncols = len(rows[0])
    red, pivots = rref(rows, ncols) if rows else ([], [])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [mpq(0)] * ncols
        v[f] = mpq(1)
        for row, p in zip(red, pivots):
            v[p] = -row[f]
        basis.append(v)
    return basis


def solve(rows, rhs):
    """One solution of ``rows @ v = rhs`` or ``None`` if inconsistent."""
    ncols = len(rows[0])
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    red, pivots = rref(aug, ncols + 1)
    if ncols in pivots:
        return None
    v = [mpq(0)] * ncols
    for row, p in zip(red, pivots):
        v[p] = row[ncols]
    return v


def matmul(a, b):
    bt = list(zip(*b))
    return [[_dot(r, c) for c in bt] for r in a]


def matvec(a, v):
    return [_dot(r, v) for r in a]


def _dot(r, c):
    acc = mpq(0)
    for x, y in zip(r, c):
        if not is_zero(x) and not is_zero(y):
            acc = acc + x * y
    return acc


def identity(n: int):
    return [[mpq(1) if i == j else mpq(0) for j in range(n)] for i in range(n)]


def determinant(rows):
    """Determinant by Gaussian elimination."""
    m = [list(r) for r in rows]
    n = len(m)
    d = mpq(1)
    for c in range(n):
        piv = next((i for i in range(c, n) if not is_zero(m[i][c])), None)
        if piv is None:
            return mpq(0)
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            d = -d
        p = m[c][c]
        d = d * p
        for i in range(c + 1, n):
            if not is_zero(m[i][c]):
                f = m[i][c] / p
                m[i] = [a - f * b for a, b in zip(m[i], m[c])]
    return d


def same_row_space(a, b) -> bool:
    ra, _ = rref(a)
    rb, _ = rref(b)
    return len(ra) == len(rb) and all(
        all(is_zero(x - y) for x, y in zip(r1, r2)) for r1, r2 in zip(ra, rb))
