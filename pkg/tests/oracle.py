"""Plain-loop reference implementations used to cross-check the package.

Nothing here touches numpy tensors or the package's checkers; every identity
is evaluated element by element on basis vectors, straight from its
definition.  Values are raw field elements: Fractions over Q, ints mod p.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product


class Arith:
    def __init__(self, p=None):
        self.p = p

    def n(self, x):
        return Fraction(x) if self.p is None else int(x) % self.p

    def vec(self, xs):
        return [self.n(x) for x in xs]

    def add(self, *vs):
        return self.vec(sum(col) for col in zip(*vs))

    def sub(self, u, v):
        return self.vec(a - b for a, b in zip(u, v))

    def scale(self, s, v):
        return self.vec(s * x for x in v)

    def basis(self, n, i):
        return self.vec(1 if k == i else 0 for k in range(n))


def arith_of(field) -> Arith:
    return Arith(field.p)


def raw_table(A):
    return [[[x for x in A.table[i, j]] for j in range(A.dim)] for i in range(A.dim)]


def raw_matrix(op):
    return [list(row) for row in op.matrix]


def mul(ar: Arith, c, x, y):
    n = len(c)
    out = [0] * n
    for i in range(n):
        if x[i] == 0:
            continue
        for j in range(n):
            if y[j] == 0:
                continue
            for k in range(n):
                out[k] += x[i] * y[j] * c[i][j][k]
    return ar.vec(out)


def act(ar: Arith, M, x):
    n = len(M)
    return ar.vec(sum(M[i][j] * x[j] for j in range(n)) for i in range(n))


def triples(n):
    return product(range(n), repeat=3)


def pairs(n):
    return product(range(n), repeat=2)


# -- associativity -------------------------------------------------------


def assoc_violations(ar: Arith, c):
    n = len(c)
    e = [ar.basis(n, i) for i in range(n)]
    bad = []
    for i, j, k in triples(n):
        if mul(ar, c, mul(ar, c, e[i], e[j]), e[k]) != mul(ar, c, e[i], mul(ar, c, e[j], e[k])):
            bad.append((i, j, k))
    return bad


# -- Rota-Baxter family --------------------------------------------------


def rb_system_ok(ar: Arith, c, R, S):
    n = len(c)
    e = [ar.basis(n, i) for i in range(n)]
    for i, j in pairs(n):
        a, b = e[i], e[j]
        inner = ar.add(mul(ar, c, act(ar, R, a), b), mul(ar, c, a, act(ar, S, b)))
        if mul(ar, c, act(ar, R, a), act(ar, R, b)) != act(ar, R, inner):
            return False
        if mul(ar, c, act(ar, S, a), act(ar, S, b)) != act(ar, S, inner):
            return False
    return True


def rb_weight_ok(ar: Arith, c, R, lam):
    n = len(c)
    e = [ar.basis(n, i) for i in range(n)]
    for i, j in pairs(n):
        a, b = e[i], e[j]
        inner = ar.add(mul(ar, c, act(ar, R, a), b), mul(ar, c, a, act(ar, R, b)), ar.scale(lam, mul(ar, c, a, b)))
        if mul(ar, c, act(ar, R, a), act(ar, R, b)) != act(ar, R, inner):
            return False
    return True


def generalized_ok(ar: Arith, c, Rb, alpha, beta):
    n = len(c)
    e = [ar.basis(n, i) for i in range(n)]
    for i, j in pairs(n):
        a, b = e[i], e[j]
        ab = mul(ar, c, a, b)
        inner = ar.add(mul(ar, c, act(ar, Rb, a), b), mul(ar, c, a, act(ar, Rb, b)), ar.scale(alpha, ab))
        if mul(ar, c, act(ar, Rb, a), act(ar, Rb, b)) != ar.add(act(ar, Rb, inner), ar.scale(beta, ab)):
            return False
    return True


def nijenhuis_ok(ar: Arith, c, N):
    n = len(c)
    e = [ar.basis(n, i) for i in range(n)]
    for i, j in pairs(n):
        a, b = e[i], e[j]
        inner = ar.sub(ar.add(mul(ar, c, act(ar, N, a), b), mul(ar, c, a, act(ar, N, b))), act(ar, N, mul(ar, c, a, b)))
        if mul(ar, c, act(ar, N, a), act(ar, N, b)) != act(ar, N, inner):
            return False
    return True


def triple_table(ar: Arith, c, literal=False):
    """Product on A+A+A: (aa', bb', ac'+cb'); ``literal`` uses a'b' in the middle slot."""
    n = len(c)
    size = 3 * n
    out = [[[ar.n(0)] * size for _ in range(size)] for _ in range(size)]
    for x, y in pairs(size):
        u, v = ar.basis(size, x), ar.basis(size, y)
        a, b, cc = u[:n], u[n:2 * n], u[2 * n:]
        a2, b2, c2 = v[:n], v[n:2 * n], v[2 * n:]
        first = mul(ar, c, a, a2)
        second = mul(ar, c, a2, b2) if literal else mul(ar, c, b, b2)
        third = ar.add(mul(ar, c, a, c2), mul(ar, c, cc, b2))
        out[x][y] = first + second + third
    return out


# -- double operators ----------------------------------------------------
# sigma a = L a, a sigma = Rt a


def bimult_ok(ar: Arith, c, L, Rt):
    n = len(c)
    e = [ar.basis(n, i) for i in range(n)]
    for i, j in pairs(n):
        a, b = e[i], e[j]
        ab = mul(ar, c, a, b)
        if act(ar, L, ab) != mul(ar, c, act(ar, L, a), b):
            return False
        if act(ar, Rt, ab) != mul(ar, c, a, act(ar, Rt, b)):
            return False
        if mul(ar, c, a, act(ar, L, b)) != mul(ar, c, act(ar, Rt, a), b):
            return False
    return True


def self_permutable_ok(ar: Arith, L, Rt):
    n = len(L)
    return all(act(ar, Rt, act(ar, L, ar.basis(n, i))) == act(ar, L, act(ar, Rt, ar.basis(n, i))) for i in range(n))


def compat_ok(ar: Arith, R, S, L, Rt):
    """S(a) sigma - sigma R(a) = sigma a sigma."""
    n = len(R)
    for i in range(n):
        a = ar.basis(n, i)
        lhs = ar.sub(act(ar, Rt, act(ar, S, a)), act(ar, L, act(ar, R, a)))
        if lhs != act(ar, L, act(ar, Rt, a)):
            return False
    return True


def homothetic_ok(ar: Arith, c, R, S, L, Rt):
    return (
        rb_system_ok(ar, c, R, S)
        and bimult_ok(ar, c, L, Rt)
        and self_permutable_ok(ar, L, Rt)
        and compat_ok(ar, R, S, L, Rt)
    )


# -- Dyck ----------------------------------------------------------------


def dyck_products(ar: Arith, c, R, S, Rt, m):
    """The m+1 operations, as functions on coordinate vectors."""
    def sig(a, b):
        return mul(ar, c, act(ar, Rt, a), b)

    ops = [lambda a, b: mul(ar, c, act(ar, R, a), b)]
    for i in range(1, m):
        sign = 1 if i % 2 == 1 else -1
        ops.append(lambda a, b, s=sign: ar.scale(s, sig(a, b)))
    even = 1 if m % 2 == 0 else 0
    ops.append(lambda a, b: ar.sub(mul(ar, c, a, act(ar, S, b)), ar.scale(even, sig(a, b))))
    return ops


def tensor_ops(ar: Arith, tensors):
    return [lambda a, b, t=t: mul(ar, t, a, b) for t in tensors]


def dyck_violations(ar: Arith, ops, n):
    """Set of (axiom id, basis triple) where an axiom fails."""
    m = len(ops) - 1
    bad = set()

    def total(ks, a, b):
        return ar.add(*[ops[k](a, b) for k in ks]) if ks else ar.vec([0] * n)

    for x, y, z in triples(n):
        a, b, cc = ar.basis(n, x), ar.basis(n, y), ar.basis(n, z)
        for i in range(m + 1):
            for j in range(i + 1, m + 1):
                if ops[i](a, ops[j](b, cc)) != ops[j](ops[i](a, b), cc):
                    bad.add((f"mixed({i},{j})", (x, y, z)))
        if ops[0](a, ops[0](b, cc)) != ops[0](total(range(m + 1), a, b), cc):
            bad.add(("first", (x, y, z)))
        if ops[m](a, total(range(m + 1), b, cc)) != ops[m](ops[m](a, b), cc):
            bad.add(("last", (x, y, z)))
        for i in range(1, m):
            if ops[i](a, total(range(i + 1), b, cc)) != ops[i](total(range(i, m + 1), a, b), cc):
                bad.add((f"middle({i})", (x, y, z)))
    return bad
