"""Double operators, bimultiplications and homothetic Rota-Baxter systems.

A double operator ``sigma`` is a pair of linear maps, the left action
``a -> sigma a`` and the right action ``a -> a sigma``.  Throughout,
``a sigma b`` means ``(a sigma) b``; for a bimultiplication this agrees with
``a (sigma b)``, and for a self-permutable one every bracketing of a word in
elements and ``sigma`` gives the same result.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebra import Algebra, Element, LinOp, _require_same, after, bilinear, identity_op, zero_op
from .errors import AlgebraMismatch, InvalidInput
from .field import Scalar
from .report import CheckReport, compare
from .rota_baxter import GeneralizedRBOperator, RBSystem, check_generalized_rb, check_rb_system

__all__ = [
    "DoubleOperator",
    "HomotheticRBSystem",
    "check_bimultiplication",
    "check_self_permutable",
    "check_homothetic_compat",
    "check_homothetic",
    "inner_homothetism",
    "scalar_homothetism",
    "zero_homothetism",
    "gamma_from_weights",
]


@dataclass(frozen=True)
class DoubleOperator:
    """A pair ``(left, right)`` of operators on one algebra.

    No axioms are enforced here so that failing operators can be built on
    purpose; :class:`HomotheticRBSystem` is where they are required.
    """

    left: LinOp
    right: LinOp

    def __post_init__(self):
        _require_same(self.left.algebra, self.right.algebra, AlgebraMismatch)

    @property
    def algebra(self) -> Algebra:
        return self.left.algebra

    def act_left(self, a: Element) -> Element:
        """``sigma a``"""
        return self.left(a)

    def act_right(self, a: Element) -> Element:
        """``a sigma``"""
        return self.right(a)

    def sandwich(self, a: Element, b: Element) -> Element:
        """``a sigma b``, evaluated as ``(a sigma) b``."""
        return self.right(a) * b

    def to_json(self) -> dict:
        return {"left": self.left.to_json()["matrix"], "right": self.right.to_json()["matrix"]}


def _operands(sigma: DoubleOperator, A: Algebra | None = None):
    if not isinstance(sigma, DoubleOperator):
        raise TypeError(f"expected a DoubleOperator, got {type(sigma).__name__}")
    if A is not None:
        _require_same(A, sigma.algebra, AlgebraMismatch)
    A = sigma.algebra
    return A, A.field, A.table, sigma.left.matrix, sigma.right.matrix


def check_bimultiplication(sigma: DoubleOperator) -> CheckReport:
    """The three bimultiplication identities on all basis pairs.

    left-linear:   sigma(ab) = (sigma a) b
    right-linear:  (ab) sigma = a (b sigma)
    balanced:      a (sigma b) = (a sigma) b
    """
    A, F, c, L, Rt = _operands(sigma)
    report = CheckReport(F)
    report.violations += compare("left-linear", after(F, L, c), bilinear(F, c, left=L))
    report.violations += compare("right-linear", after(F, Rt, c), bilinear(F, c, right=Rt))
    report.violations += compare("balanced", bilinear(F, c, right=L), bilinear(F, c, left=Rt))
    return report


def _columns(m: np.ndarray) -> np.ndarray:
    # basis index first, coordinates last
    return np.ascontiguousarray(m.T)


def check_self_permutable(sigma: DoubleOperator) -> CheckReport:
    """``(sigma a) sigma = sigma (a sigma)``, i.e. the two actions commute."""
    A, F, c, L, Rt = _operands(sigma)
    lhs = F.normalize(Rt.dot(L))
    rhs = F.normalize(L.dot(Rt))
    return CheckReport(F, compare("self-permutable", _columns(lhs), _columns(rhs)))


def check_homothetic_compat(system: RBSystem, sigma: DoubleOperator, *, strict: bool = False) -> CheckReport:
    """``S(a) sigma - sigma R(a) = sigma a sigma`` on every basis vector.

    The identity is linear in ``a``, so it is checked column by column as the
    matrix equation ``right S - left R = left right``.  ``sigma a sigma`` is
    taken as ``sigma (a sigma)``; with ``strict=True`` the other bracketing
    ``(sigma a) sigma`` must agree as well, which catches operators that are
    not self-permutable.
    """
    A, F, c, L, Rt = _operands(sigma, system.algebra)
    R, S = system.R.matrix, system.S.matrix
    lhs = F.normalize(Rt.dot(S) - L.dot(R))
    rhs = F.normalize(L.dot(Rt))
    report = CheckReport(F, compare("compat", _columns(lhs), _columns(rhs)))
    if strict:
        other = F.normalize(Rt.dot(L))
        report.violations += compare("compat-bracketing", _columns(other), _columns(rhs))
    return report


def check_homothetic(system: RBSystem, sigma: DoubleOperator) -> dict[str, CheckReport]:
    """Every condition a homothetic Rota-Baxter system must satisfy, by name."""
    return {
        "rb_system": check_rb_system(system.algebra, system.R, system.S),
        "bimultiplication": check_bimultiplication(sigma),
        "self_permutable": check_self_permutable(sigma),
        "compat": check_homothetic_compat(system, sigma),
    }


@dataclass(frozen=True)
class HomotheticRBSystem:
    system: RBSystem
    sigma: DoubleOperator

    def __post_init__(self):
        failed = {name: r.witnesses for name, r in check_homothetic(self.system, self.sigma).items() if not r}
        if failed:
            raise InvalidInput(f"not a homothetic Rota-Baxter system: {failed}")

    @property
    def algebra(self) -> Algebra:
        return self.system.algebra

    @property
    def R(self) -> LinOp:
        return self.system.R

    @property
    def S(self) -> LinOp:
        return self.system.S


def inner_homothetism(s: Element) -> DoubleOperator:
    """``(a -> s a, a -> a s)``."""
    A = s.algebra
    return DoubleOperator(A.left_multiplication(s), A.right_multiplication(s))


def scalar_homothetism(A: Algebra, lam) -> DoubleOperator:
    op = identity_op(A) * lam
    return DoubleOperator(op, op)


def gamma_from_weights(g: GeneralizedRBOperator, choice: tuple) -> HomotheticRBSystem:
    """The homothetic system ``(Rbar + lam id, Rbar + mu id, mu - lam)``.

    With ``sigma`` a scalar ``gamma`` and ``S - R = (mu - lam) id`` the
    compatibility condition becomes ``gamma (mu - lam) a = gamma^2 a``, so the
    non-zero solution is ``gamma = mu - lam``; its square is the discriminant
    ``alpha^2 - 4 beta``.
    """
    if not isinstance(g, GeneralizedRBOperator):
        raise InvalidInput("gamma_from_weights expects a GeneralizedRBOperator")
    if not check_generalized_rb(g.algebra, g.Rbar, g.alpha, g.beta):
        raise InvalidInput("operator fails its own generalized check")
    F = g.algebra.field
    if hasattr(choice, "lam") and hasattr(choice, "mu"):
        choice = (choice.lam, choice.mu)
    try:
        lam, mu = (x if isinstance(x, Scalar) else F(x) for x in choice)
    except (TypeError, ValueError) as exc:
        raise InvalidInput(f"bad root pair {choice!r}") from exc
    if lam + mu != g.alpha or lam * mu != g.beta:
        raise InvalidInput(f"({lam}, {mu}) does not satisfy lam + mu = {g.alpha}, lam mu = {g.beta}")
    ident = identity_op(g.algebra)
    system = RBSystem(g.Rbar + ident * lam, g.Rbar + ident * mu)
    return HomotheticRBSystem(system, scalar_homothetism(g.algebra, mu - lam))


def zero_homothetism(A: Algebra) -> DoubleOperator:
    z = zero_op(A)
    return DoubleOperator(z, z)
