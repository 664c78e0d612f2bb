"""Rota-Baxter operators, Rota-Baxter systems and their Nijenhuis embedding.

All predicates quantify over pairs of basis vectors only.  Each identity is
bilinear in ``(a, b)``: both sides are sums of terms in which ``a`` and ``b``
each occur exactly once and linearly, so agreement on ``(e_i, e_j)`` for all
``i, j`` implies agreement on all of ``A x A``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple

import numpy as np

from .algebra import Algebra, LinOp, after, bilinear, identity_op, _require_same
from .errors import DimensionMismatch, FieldMismatch, InvalidInput
from .field import Field, Scalar
from .report import CheckReport, compare

__all__ = [
    "WeightedRBOperator",
    "GeneralizedRBOperator",
    "RBSystem",
    "OperatorPair",
    "NijenhuisEmbedding",
    "SplitSystem",
    "check_rb_weight",
    "check_generalized_rb",
    "check_rb_system",
    "check_nijenhuis",
    "from_weighted",
    "from_generalized",
    "discriminant",
    "weight_splittings",
    "build_triple_algebra",
    "build_nijenhuis_matrix",
    "nijenhuis_embedding",
]


def _over(A: Algebra, *ops: LinOp):
    for T in ops:
        if not isinstance(T, LinOp):
            raise TypeError(f"expected a LinOp, got {type(T).__name__}")
        _require_same(A, T.algebra, DimensionMismatch)


def _rb_rhs(A: Algebra, outer: LinOp, R: LinOp, S: LinOp, weight=None) -> np.ndarray:
    """Tensor of ``outer(R(a) b + a S(b) + weight * ab)``."""
    F, c = A.field, A.table
    inner = F.normalize(bilinear(F, c, left=R.matrix) + bilinear(F, c, right=S.matrix))
    if weight is not None:
        inner = F.normalize(inner + F.scale(c, weight))
    return after(F, outer.matrix, inner)


# -- predicates --------------------------------------------------------------


def check_rb_weight(A: Algebra, R: LinOp, lam) -> CheckReport:
    """``R(a)R(b) = R(R(a)b + aR(b) + lam ab)`` on all basis pairs."""
    _over(A, R)
    lhs = bilinear(A.field, A.table, R.matrix, R.matrix)
    rhs = _rb_rhs(A, R, R, R, lam)
    return CheckReport(A.field, compare("rota-baxter", lhs, rhs))


def check_generalized_rb(A: Algebra, Rbar: LinOp, alpha, beta) -> CheckReport:
    """``Rbar(a)Rbar(b) = Rbar(Rbar(a)b + aRbar(b) + alpha ab) + beta ab``."""
    _over(A, Rbar)
    F = A.field
    lhs = bilinear(F, A.table, Rbar.matrix, Rbar.matrix)
    rhs = F.normalize(_rb_rhs(A, Rbar, Rbar, Rbar, alpha) + F.scale(A.table, beta))
    return CheckReport(F, compare("generalized-rota-baxter", lhs, rhs))


def check_rb_system(A: Algebra, R: LinOp, S: LinOp) -> CheckReport:
    """Both system identities; witnesses are tagged ``"R"`` or ``"S"``.

    R:  R(a)R(b) = R(R(a)b + aS(b))
    S:  S(a)S(b) = S(R(a)b + aS(b))
    """
    _over(A, R, S)
    F, c = A.field, A.table
    report = CheckReport(F)
    report.violations += compare("R", bilinear(F, c, R.matrix, R.matrix), _rb_rhs(A, R, R, S))
    report.violations += compare("S", bilinear(F, c, S.matrix, S.matrix), _rb_rhs(A, S, R, S))
    return report


def check_nijenhuis(B: Algebra, N: LinOp) -> CheckReport:
    """``N(a)N(b) = N(N(a)b + aN(b) - N(ab))`` on all basis pairs of ``B``."""
    _over(B, N)
    F, c = B.field, B.table
    lhs = bilinear(F, c, N.matrix, N.matrix)
    inner = bilinear(F, c, left=N.matrix) + bilinear(F, c, right=N.matrix) - after(F, N.matrix, c)
    rhs = after(F, N.matrix, F.normalize(inner))
    return CheckReport(F, compare("nijenhuis", lhs, rhs))


# -- validated bundles -------------------------------------------------------


def _scalar(field: Field, x) -> Scalar:
    return x if isinstance(x, Scalar) and x.field == field else field(x)


@dataclass(frozen=True)
class WeightedRBOperator:
    """A Rota-Baxter operator of weight ``lam``; validated on construction."""

    R: LinOp
    lam: Scalar

    def __post_init__(self):
        object.__setattr__(self, "lam", _scalar(self.R.field, self.lam))
        report = check_rb_weight(self.R.algebra, self.R, self.lam)
        if not report:
            raise InvalidInput(f"not a Rota-Baxter operator of weight {self.lam}: {report.witnesses}")

    @property
    def algebra(self) -> Algebra:
        return self.R.algebra


@dataclass(frozen=True)
class GeneralizedRBOperator:
    Rbar: LinOp
    alpha: Scalar
    beta: Scalar

    def __post_init__(self):
        F = self.Rbar.field
        object.__setattr__(self, "alpha", _scalar(F, self.alpha))
        object.__setattr__(self, "beta", _scalar(F, self.beta))
        report = check_generalized_rb(self.Rbar.algebra, self.Rbar, self.alpha, self.beta)
        if not report:
            raise InvalidInput(
                f"not a generalized Rota-Baxter operator of weights ({self.alpha}, {self.beta}): "
                f"{report.witnesses}"
            )

    @property
    def algebra(self) -> Algebra:
        return self.Rbar.algebra


@dataclass(frozen=True)
class RBSystem:
    R: LinOp
    S: LinOp

    def __post_init__(self):
        _require_same(self.R.algebra, self.S.algebra, DimensionMismatch)
        report = check_rb_system(self.R.algebra, self.R, self.S)
        if not report:
            raise InvalidInput(f"not a Rota-Baxter system: {report.witnesses}")

    @property
    def algebra(self) -> Algebra:
        return self.R.algebra

    @property
    def A(self) -> Algebra:
        return self.R.algebra


@dataclass(frozen=True)
class OperatorPair:
    """An unvalidated ``(R, S)`` pair, for predicates that only read the operators."""

    R: LinOp
    S: LinOp

    @property
    def algebra(self) -> Algebra:
        return self.R.algebra


class SplitSystem(NamedTuple):
    """A Rota-Baxter system ``(Rbar + lam id, Rbar + mu id)``."""

    system: RBSystem
    lam: Scalar
    mu: Scalar


@dataclass(frozen=True)
class NijenhuisEmbedding:
    """The triple algebra ``B`` and the block operator ``N`` built from ``(R, S)``."""

    B: Algebra
    N: LinOp


# -- constructions -----------------------------------------------------------


def from_weighted(w: WeightedRBOperator) -> RBSystem:
    """``(R, R + lam id)``."""
    if not isinstance(w, WeightedRBOperator):
        raise InvalidInput("from_weighted expects a WeightedRBOperator")
    if not check_rb_weight(w.algebra, w.R, w.lam):
        raise InvalidInput("operator fails its own weight check")
    return RBSystem(w.R, w.R + identity_op(w.algebra) * w.lam)


def discriminant(alpha: Scalar, beta: Scalar) -> Scalar:
    return alpha * alpha - 4 * beta


def weight_splittings(alpha: Scalar, beta: Scalar) -> list[tuple[Scalar, Scalar]]:
    """Ordered pairs ``(lam, mu)`` with ``lam + mu = alpha`` and ``lam mu = beta``.

    The roots of ``t^2 - alpha t + beta`` come from a square root of the
    discriminant; in characteristic 2 the quadratic formula is unavailable and
    the roots are found by exhaustive search.  The smaller root (by value over
    Q, by residue over F_p) comes first; both orderings are returned when the
    roots differ.
    """
    F = alpha.field
    if beta.field != F:
        raise FieldMismatch(f"weights over {F} and {beta.field}")
    if F.p == 2:
        roots = [F(t) for t in F.elements() if F(t) * F(t) - alpha * t + beta == 0]
    else:
        s = discriminant(alpha, beta).sqrt()
        if s is None:
            return []
        roots = sorted({(alpha - s) / 2, (alpha + s) / 2}, key=lambda r: r.value)
    if not roots:
        return []
    if len(roots) == 1:
        # a repeated root; in characteristic 2 the search finds it once
        return [(roots[0], roots[0])]
    lo, hi = roots
    return [(lo, hi), (hi, lo)]


def from_generalized(g: GeneralizedRBOperator) -> list[SplitSystem]:
    """All Rota-Baxter systems ``(Rbar + lam id, Rbar + mu id)`` attached to ``g``.

    One system per ordered root pair of ``t^2 - alpha t + beta``; an empty list
    when the quadratic has no roots in the field.
    """
    if not isinstance(g, GeneralizedRBOperator):
        raise InvalidInput("from_generalized expects a GeneralizedRBOperator")
    if not check_generalized_rb(g.algebra, g.Rbar, g.alpha, g.beta):
        raise InvalidInput("operator fails its own generalized check")
    ident = identity_op(g.algebra)
    out = []
    for lam, mu in weight_splittings(g.alpha, g.beta):
        if lam + mu != g.alpha or lam * mu != g.beta:
            raise AssertionError(f"Vieta relations fail for ({lam}, {mu})")
        out.append(SplitSystem(RBSystem(g.Rbar + ident * lam, g.Rbar + ident * mu), lam, mu))
    return out


@lru_cache(maxsize=64)
def build_triple_algebra(A: Algebra) -> Algebra:
    """The algebra on ``A + A + A`` with ``(a,b,c)(a',b',c') = (aa', bb', ac' + cb')``.

    Basis order is ``[first copy | second copy | third copy]``.
    """
    n, c, F = A.dim, A.table, A.field
    t = F.zeros((3 * n, 3 * n, 3 * n))
    first, second, third = slice(0, n), slice(n, 2 * n), slice(2 * n, 3 * n)
    t[first, first, first] = c
    t[second, second, second] = c
    t[first, third, third] = c
    t[third, second, third] = c
    label = f"triple({A.label})" if A.label else "triple"
    return Algebra(F, t, label)


def build_nijenhuis_matrix(A: Algebra, R: LinOp, S: LinOp) -> LinOp:
    """``N(a, b, c) = (R(c), S(c), 0)`` on the triple algebra of ``A``."""
    _over(A, R, S)
    n = A.dim
    B = build_triple_algebra(A)
    m = A.field.zeros((3 * n, 3 * n))
    m[:n, 2 * n:] = R.matrix
    m[n:2 * n, 2 * n:] = S.matrix
    return LinOp(B, m)


def nijenhuis_embedding(system: RBSystem) -> NijenhuisEmbedding:
    A = system.algebra
    return NijenhuisEmbedding(build_triple_algebra(A), build_nijenhuis_matrix(A, system.R, system.S))
