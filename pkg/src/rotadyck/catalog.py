"""Standard small algebras and operators used by the examples and tests."""

from __future__ import annotations

from fractions import Fraction

from .algebra import Algebra, LinOp
from .errors import InvalidInput
from .field import Field


def _table(n: int, field: Field):
    return [[[0] * n for _ in range(n)] for _ in range(n)]


def one_dim(field: Field, k=1, label: str | None = None) -> Algebra:
    """``e^2 = k e``."""
    return Algebra(field, [[[k]]], label or ("K" if field.raw(k) == field.raw(1) else f"e2={k}e"))


def zero_algebra(field: Field, n: int) -> Algebra:
    return Algebra(field, _table(n, field), f"zero{n}")


def truncated_polynomial(field: Field, n: int) -> Algebra:
    """``K[x]/(x^n)`` on the basis ``1, x, ..., x^(n-1)``."""
    c = _table(n, field)
    for i in range(n):
        for j in range(n - i):
            c[i][j][i + j] = 1
    return Algebra(field, c, f"K[x]/(x^{n})")


def nilpotent_square(field: Field) -> Algebra:
    """``e_0^2 = e_1``, all other products zero (``x K[x]/(x^3)``)."""
    c = _table(2, field)
    c[0][0][1] = 1
    return Algebra(field, c, "nil2")


def diagonal(field: Field, n: int) -> Algebra:
    """``K^n`` with componentwise product."""
    c = _table(n, field)
    for i in range(n):
        c[i][i][i] = 1
    return Algebra(field, c, "K" if n == 1 else f"K^{n}")


def idempotent_plus_zero(field: Field) -> Algebra:
    c = _table(2, field)
    c[0][0][0] = 1
    return Algebra(field, c, "K+0")


def left_unit(field: Field) -> Algebra:
    """``e_0`` is a left unit, ``e_1`` a left annihilator: ``e_0 e_0 = e_0, e_0 e_1 = e_1``."""
    c = _table(2, field)
    c[0][0][0] = 1
    c[0][1][1] = 1
    return Algebra(field, c, "left-unit")


def right_unit(field: Field) -> Algebra:
    c = _table(2, field)
    c[0][0][0] = 1
    c[1][0][1] = 1
    return Algebra(field, c, "right-unit")


def quadratic(field: Field, s, t, label: str | None = None) -> Algebra:
    """``K[x]/(x^2 - s x - t)`` on the basis ``1, x``."""
    c = _table(2, field)
    c[0][0][0] = 1
    c[0][1][1] = 1
    c[1][0][1] = 1
    c[1][1][0] = t
    c[1][1][1] = s
    return Algebra(field, c, label or f"K[x]/(x^2-{s}x-{t})")


def quadratic_field(field: Field) -> Algebra | None:
    """A degree-2 field extension of a prime field, or None over Q."""
    if field.p is None:
        return None
    if field.p == 2:
        return quadratic(field, 1, 1, "F_4")
    d = next(x for x in range(2, field.p) if field.sqrt(x) is None)
    return quadratic(field, 0, d, f"F_{field.p}[x]/(x^2-{d})")


def upper_triangular(field: Field) -> Algebra:
    """Upper-triangular 2x2 matrices on the basis ``E11, E12, E22``."""
    c = _table(3, field)
    c[0][0][0] = 1
    c[0][1][1] = 1
    c[1][2][1] = 1
    c[2][2][2] = 1
    return Algebra(field, c, "T2")


def matrix_algebra(field: Field, k: int = 2) -> Algebra:
    """``M_k(K)`` on the basis ``E_rs`` in row-major order."""
    n = k * k
    c = _table(n, field)
    for r in range(k):
        for s in range(k):
            for u in range(k):
                c[r * k + s][s * k + u][r * k + u] = 1
    return Algebra(field, c, f"M{k}")


def small_algebras(field: Field) -> dict[str, Algebra]:
    """One representative of each shape of associative algebra of dimension 1 and 2."""
    algebras = [
        zero_algebra(field, 1),
        diagonal(field, 1),
        zero_algebra(field, 2),
        nilpotent_square(field),
        idempotent_plus_zero(field),
        left_unit(field),
        right_unit(field),
        diagonal(field, 2),
        truncated_polynomial(field, 2),
    ]
    ext = quadratic_field(field)
    if ext is not None:
        algebras.append(ext)
    return {A.label: A for A in algebras}


def integration_operator(A: Algebra) -> LinOp:
    """Formal integration ``x^k -> x^(k+1)/(k+1)`` on ``K[x]/(x^n)``, killing ``x^(n-1)``."""
    n = A.dim
    if A != truncated_polynomial(A.field, n):
        raise InvalidInput("integration is defined on truncated polynomial algebras")
    m = A.field.zeros((n, n))
    for k in range(n - 1):
        m[k + 1, k] = A.field.raw(Fraction(1, k + 1))
    return LinOp(A, m)
