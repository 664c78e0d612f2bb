"""Gaussian elimination over an exact field."""

from __future__ import annotations

from .field import Field


def row_reduce(field: Field, rows):
    """Reduced row echelon form of ``rows`` (lists of raw field values).

    Returns ``(matrix, pivot_columns)``; the input is not modified.
    """
    m = [[field.reduce(x) for x in row] for row in rows]
    n_rows = len(m)
    n_cols = len(m[0]) if m else 0
    pivots = []
    r = 0
    for c in range(n_cols):
        pivot = next((i for i in range(r, n_rows) if m[i][c] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = field.inverse(m[r][c])
        m[r] = [field.reduce(x * inv) for x in m[r]]
        for i in range(n_rows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [field.reduce(x - f * y) for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == n_rows:
            break
    return m, pivots


def solve(field: Field, a, b):
    """One solution ``x`` of ``a x = b`` (free variables set to 0), or None."""
    n = len(a[0])
    aug = [list(row) + [rhs] for row, rhs in zip(a, b)]
    m, pivots = row_reduce(field, aug)
    if n in pivots:
        return None
    x = [field.reduce(0)] * n
    for row, c in zip(m, pivots):
        x[c] = row[n]
    return x


def rank(field: Field, rows) -> int:
    return len(row_reduce(field, rows)[1])
