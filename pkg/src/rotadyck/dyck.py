"""Dyck^m-algebras: representation, axiom checking and construction.

A Dyck^m-algebra carries ``m + 1`` bilinear operations ``*_0, ..., *_m``.
The axioms fall into four families, reported under these ids:

``mixed(i,j)``  for ``0 <= i < j <= m``::

    a *_i (b *_j c) = (a *_i b) *_j c

``first``::

    a *_0 (b *_0 c) = (sum_{i=0..m} a *_i b) *_0 c

``last``::

    a *_m (sum_{i=0..m} b *_i c) = (a *_m b) *_m c

``middle(i)`` for ``1 <= i <= m - 1``::

    a *_i (sum_{k=0..i} b *_k c) = (sum_{k=i..m} a *_k b) *_i c

Every axiom is trilinear, so checking all ``n^3`` basis triples is complete.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebra import Algebra, Element, _frozen, bilinear, nest_left, nest_right
from .errors import DimensionMismatch, IndexOutOfRange, InvalidInput, UnsupportedLevel
from .field import Field, Scalar
from .homothetism import HomotheticRBSystem
from .report import CheckReport, compare

__all__ = [
    "DyckAlgebra",
    "DyckCheckReport",
    "ProofIdentityReport",
    "dyck_multiply",
    "check_dyck_axioms",
    "build_dyck",
    "check_theorem_proof_identities",
    "axiom_ids",
]

DyckCheckReport = CheckReport


class DyckAlgebra:
    """``m + 1`` structure-constant tensors ``d_i[j, k, l]`` on an ``n``-dimensional space.

    ``algebra`` optionally records the associative algebra the operations
    were built on; it is only used to return :class:`Element` results.
    """

    __slots__ = ("field", "products", "label", "algebra")

    def __init__(self, field: Field, products, label: str | None = None, algebra: Algebra | None = None):
        tensors = [field.array(t) for t in products]
        if not tensors:
            raise DimensionMismatch("a Dyck algebra needs at least one operation")
        n = tensors[0].shape[0] if tensors[0].ndim else 0
        for t in tensors:
            if t.shape != (n, n, n) or n < 1:
                raise DimensionMismatch(f"every product tensor must be {n}x{n}x{n}, got {t.shape}")
        if algebra is not None and (algebra.field != field or algebra.dim != n):
            raise DimensionMismatch("carrier algebra does not match the product tensors")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "products", tuple(_frozen(t) for t in tensors))
        object.__setattr__(self, "label", label)
        object.__setattr__(self, "algebra", algebra)

    def __setattr__(self, name, value):
        raise AttributeError("DyckAlgebra is immutable")

    @classmethod
    def from_associative(cls, A: Algebra) -> "DyckAlgebra":
        """The ``m = 0`` Dyck algebra whose single operation is the product of ``A``."""
        return cls(A.field, [A.table], A.label, A)

    @property
    def dim(self) -> int:
        return self.products[0].shape[0]

    @property
    def m(self) -> int:
        return len(self.products) - 1

    def __eq__(self, other):
        if not isinstance(other, DyckAlgebra):
            return NotImplemented
        return (
            self.field == other.field
            and len(self.products) == len(other.products)
            and all(np.array_equal(x, y) for x, y in zip(self.products, other.products))
        )

    def __hash__(self):
        return hash((self.field, tuple(tuple(t.reshape(-1).tolist()) for t in self.products)))

    def __repr__(self):
        return f"<DyckAlgebra m={self.m} dim={self.dim} over {self.field}>"

    def replace_entry(self, i: int, index: tuple[int, int, int], value) -> "DyckAlgebra":
        """Copy with one structure constant of ``*_i`` overwritten."""
        tensors = [np.array(t) for t in self.products]
        tensors[i][index] = self.field.raw(value)
        return DyckAlgebra(self.field, tensors, self.label, self.algebra)

    def to_json(self) -> dict:
        enc = self.field.encode
        return {
            "field": self.field.to_json(),
            "dim": self.dim,
            "m": self.m,
            **({"label": self.label} if self.label else {}),
            "products": [[[[enc(x) for x in t[i, j]] for j in range(self.dim)] for i in range(self.dim)] for t in self.products],
        }


def dyck_multiply(D: DyckAlgebra, i: int, a, b):
    """``a *_i b``.

    ``a`` and ``b`` are :class:`Element` instances or plain coordinate
    sequences; the result has the type of ``a`` (a tuple of :class:`Scalar`
    for plain sequences).
    """
    if not 0 <= i <= D.m:
        raise IndexOutOfRange(f"operation index {i} outside 0..{D.m}")
    F = D.field
    x = a.coords if isinstance(a, Element) else F.array(a)
    y = b.coords if isinstance(b, Element) else F.array(b)
    if x.shape != (D.dim,) or y.shape != (D.dim,):
        raise DimensionMismatch(f"operands must have {D.dim} coordinates")
    t = F.normalize(np.einsum("j,jkl->kl", x, D.products[i]))
    out = F.normalize(np.einsum("k,kl->l", y, t))
    if isinstance(a, Element):
        return Element(a.algebra, out)
    return tuple(Scalar(v, F) for v in out)


# -- axioms ------------------------------------------------------------------


def axiom_ids(m: int) -> list[str]:
    """All axiom instance ids for level ``m``, in report order."""
    ids = [f"mixed({i},{j})" for i in range(m + 1) for j in range(i + 1, m + 1)]
    ids += ["first", "last"]
    ids += [f"middle({i})" for i in range(1, m)]
    return ids


def check_dyck_axioms(D: DyckAlgebra) -> CheckReport:
    """Check every axiom instance on all basis triples.

    Violations are ordered by axiom id (in :func:`axiom_ids` order) and then
    by basis triple.  For ``m = 0`` the ``first`` and ``last`` families both
    express associativity of ``*_0`` and the other families are empty.
    """
    F, d, m = D.field, D.products, D.m

    def total(ks):
        acc = F.zeros(d[0].shape)
        for k in ks:
            acc = acc + d[k]
        return F.normalize(acc)

    report = CheckReport(F)
    for i in range(m + 1):
        for j in range(i + 1, m + 1):
            report.violations += compare(f"mixed({i},{j})", nest_left(F, d[i], d[j]), nest_right(F, d[i], d[j]))
    everything = total(range(m + 1))
    report.violations += compare("first", nest_left(F, d[0], d[0]), nest_right(F, everything, d[0]))
    report.violations += compare("last", nest_left(F, d[m], everything), nest_right(F, d[m], d[m]))
    for i in range(1, m):
        lhs = nest_left(F, d[i], total(range(i + 1)))
        rhs = nest_right(F, total(range(i, m + 1)), d[i])
        report.violations += compare(f"middle({i})", lhs, rhs)
    return report


# -- construction ------------------------------------------------------------


def _sandwich(h: HomotheticRBSystem) -> np.ndarray:
    """Tensor of ``a sigma b`` as ``(a sigma) b``, checked against ``a (sigma b)``."""
    A = h.algebra
    F, c = A.field, A.table
    via_right = bilinear(F, c, left=h.sigma.right.matrix)
    via_left = bilinear(F, c, right=h.sigma.left.matrix)
    if not np.array_equal(via_right, via_left):
        raise InvalidInput("(a sigma) b and a (sigma b) disagree; sigma is not a bimultiplication")
    return via_right


def build_dyck(h: HomotheticRBSystem, m: int) -> DyckAlgebra:
    """The Dyck^m-algebra of a homothetic Rota-Baxter system, for ``m >= 1``::

        a *_0 b = R(a) b
        a *_i b = (-1)^(i+1) a sigma b                      (1 <= i <= m-1)
        a *_m b = a S(b) - [m even] a sigma b

    ``m = 0`` is rejected: there the formulas for ``*_0`` and ``*_m`` clash.
    """
    if not isinstance(h, HomotheticRBSystem):
        raise InvalidInput("build_dyck expects a HomotheticRBSystem")
    if isinstance(m, bool) or not isinstance(m, int):
        raise InvalidInput(f"level must be an integer, got {m!r}")
    if m < 1:
        raise UnsupportedLevel(f"level {m} is not supported; the construction needs m >= 1")
    A = h.algebra
    F, c = A.field, A.table
    sigma = _sandwich(h)
    products = [bilinear(F, c, left=h.R.matrix)]
    for i in range(1, m):
        products.append(sigma if i % 2 == 1 else F.normalize(-sigma))
    last = bilinear(F, c, right=h.S.matrix)
    if m % 2 == 0:
        last = F.normalize(last - sigma)
    products.append(last)
    label = f"dyck{m}({A.label})" if A.label else f"dyck{m}"
    return DyckAlgebra(F, products, label, A)


@dataclass
class ProofIdentityReport:
    """Verdicts on the identities used to prove the construction correct.

    ``even``:  a sigma R(b) c = (a S(b) - a sigma b) sigma c
    ``odd``:   a sigma (R(b) c + b sigma c) = (a S(b)) sigma c
    ``odd_r_prefix``: the odd identity with ``R(a)`` in place of
    ``a sigma`` on the left; it is not a consequence of the axioms and is
    reported for information only.
    """

    even: CheckReport
    odd: CheckReport
    odd_r_prefix: CheckReport

    @property
    def passed(self) -> bool:
        return self.even.passed and self.odd.passed

    def __bool__(self):
        return self.passed

    @property
    def witnesses(self):
        return self.even.witnesses + self.odd.witnesses

    def to_json(self) -> dict:
        return {
            "passed": self.passed,
            "even": self.even.to_json(),
            "odd": self.odd.to_json(),
            "odd_r_prefix": self.odd_r_prefix.to_json(),
        }


def check_theorem_proof_identities(h: HomotheticRBSystem) -> ProofIdentityReport:
    A = h.algebra
    F, c = A.field, A.table
    sig = bilinear(F, c, left=h.sigma.right.matrix)
    r_first = bilinear(F, c, left=h.R.matrix)  # R(x) y
    s_second = bilinear(F, c, right=h.S.matrix)  # x S(y)
    r_plus_sig = F.normalize(r_first + sig)

    even = compare("even", nest_left(F, sig, r_first), nest_right(F, F.normalize(s_second - sig), sig))
    odd_rhs = nest_right(F, s_second, sig)
    odd = compare("odd", nest_left(F, sig, r_plus_sig), odd_rhs)
    odd_r = compare("odd_r_prefix", nest_left(F, r_first, r_plus_sig), odd_rhs)
    return ProofIdentityReport(CheckReport(F, even), CheckReport(F, odd), CheckReport(F, odd_r))
