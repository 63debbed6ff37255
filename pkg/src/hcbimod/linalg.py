"""Small exact linear-algebra kernel over Fraction (lists of lists)."""
from __future__ import annotations

from fractions import Fraction


def _copy(m):
    return [list(row) for row in m]


def row_echelon(m, rhs=None):
    """In-place Gauss-Jordan elimination; returns the pivot columns.

    If ``rhs`` is given it receives the same row operations.
    """
    n_rows = len(m)
    n_cols = len(m[0]) if n_rows else 0
    pivots = []
    piv_r = 0
    for c in range(n_cols):
        if piv_r == n_rows:
            break
        for i in range(piv_r, n_rows):
            if m[i][c] != 0:
                break
        else:
            continue
        if i != piv_r:
            m[piv_r], m[i] = m[i], m[piv_r]
            if rhs is not None:
                rhs[piv_r], rhs[i] = rhs[i], rhs[piv_r]
        p = m[piv_r][c]
        if p != 1:
            inv = 1 / p
            m[piv_r] = [x * inv for x in m[piv_r]]
            if rhs is not None:
                rhs[piv_r] = rhs[piv_r] * inv
        for r in range(n_rows):
            if r != piv_r and m[r][c] != 0:
                f = m[r][c]
                m[r] = [a - f * b for a, b in zip(m[r], m[piv_r])]
                if rhs is not None:
                    rhs[r] = rhs[r] - f * rhs[piv_r]
        pivots.append(c)
        piv_r += 1
    return pivots


def rank(m) -> int:
    if not m or not m[0]:
        return 0
    return len(row_echelon(_copy(m)))


def solve(a, b):
    """One solution of a x = b (free variables set to 0), or None if inconsistent."""
    n_cols = len(a[0])
    m = _copy(a)
    rhs = list(b)
    pivots = row_echelon(m, rhs)
    for r in range(len(pivots), len(m)):
        if rhs[r] != 0:
            return None
    x = [Fraction(0)] * n_cols
    for r, c in enumerate(pivots):
        x[c] = rhs[r]
    return x


def identity(n):
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def matmul(a, b):
    if not a:
        return []
    bt = list(zip(*b))
    return [[sum((x * y for x, y in zip(row, col)), Fraction(0)) for col in bt] for row in a]


def add(a, b):
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def sub(a, b):
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def scale(a, c):
    return [[c * x for x in row] for row in a]


def shift(a, c):
    """a + c * I"""
    return [[x + c if i == j else x for j, x in enumerate(row)] for i, row in enumerate(a)]


def is_zero(a) -> bool:
    return all(x == 0 for row in a for x in row)


def trace(a):
    return sum((a[i][i] for i in range(len(a))), Fraction(0))


def is_scalar(a, c) -> bool:
    return all((x == c) if i == j else (x == 0)
               for i, row in enumerate(a) for j, x in enumerate(row))
