"""Finite-dimensional associative algebras given by structure constants.

An algebra of dimension ``n`` over a :class:`~rotadyck.field.Field` is stored
as a dense ``(n, n, n)`` tensor ``c`` with ``e_i e_j = sum_k c[i, j, k] e_k``.
Linear operators are ``n x n`` matrices whose column ``j`` is the image of
``e_j``.

Every identity checked by this package is multilinear in its arguments, so it
holds on the whole algebra as soon as it holds on basis vectors.  The tensor
helpers below evaluate an identity on all basis tuples at once; the result
has one axis per argument plus a trailing coordinate axis.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Sequence

import numpy as np

from .errors import AlgebraMismatch, DimensionMismatch, NotAssociative
from .field import Field, Scalar
from .linalg import solve
from .report import CheckReport, compare

__all__ = [
    "Algebra",
    "Element",
    "LinOp",
    "multiply",
    "check_associative",
    "find_unit",
    "apply",
    "compose",
    "identity_op",
    "zero_op",
    "bilinear",
    "after",
    "nest_left",
    "nest_right",
]


def _frozen(arr: np.ndarray) -> np.ndarray:
    arr = np.array(arr, copy=True)
    arr.setflags(write=False)
    return arr


# -- tensor helpers ----------------------------------------------------------


def bilinear(field: Field, c: np.ndarray, left=None, right=None) -> np.ndarray:
    """Tensor of ``(e_i, e_j) -> left(e_i) * right(e_j)`` under product ``c``.

    ``left``/``right`` are matrices; ``None`` stands for the identity.
    """
    t = c
    if left is not None:
        t = field.normalize(np.einsum("xi,xjk->ijk", left, t))
    if right is not None:
        t = field.normalize(np.einsum("yj,iyk->ijk", right, t))
    return t


def after(field: Field, matrix: np.ndarray, t: np.ndarray) -> np.ndarray:
    """Apply a linear map to the trailing coordinate axis of ``t``."""
    return field.normalize(np.einsum("kl,...l->...k", matrix, t))


def nest_left(field: Field, outer: np.ndarray, inner: np.ndarray) -> np.ndarray:
    """Tensor ``[a, b, c, :]`` of ``a * (b o c)`` where ``*``=outer, ``o``=inner."""
    return field.normalize(np.einsum("bcx,axk->abck", inner, outer))


def nest_right(field: Field, inner: np.ndarray, outer: np.ndarray) -> np.ndarray:
    """Tensor ``[a, b, c, :]`` of ``(a o b) * c`` where ``o``=inner, ``*``=outer."""
    return field.normalize(np.einsum("abx,xck->abck", inner, outer))


# -- algebras ----------------------------------------------------------------


class Algebra:
    """An associative algebra given by its structure constants.

    Construction refuses non-associative tables (raising
    :class:`~rotadyck.errors.NotAssociative` with every violating triple)
    unless ``verify=False`` is passed, which exists so that
    :func:`check_associative` itself can be exercised on bad tables.
    """

    __slots__ = ("field", "table", "label")

    def __init__(self, field: Field, structure_constants, label: str | None = None, *, verify: bool = True):
        table = field.array(structure_constants)
        if table.ndim != 3 or len(set(table.shape)) != 1 or table.shape[0] < 1:
            raise DimensionMismatch(f"structure constants must be n x n x n with n >= 1, got {table.shape}")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "table", _frozen(table))
        object.__setattr__(self, "label", label)
        if verify:
            report = check_associative(self)
            if not report:
                raise NotAssociative([v.indices for v in report.violations], label)

    def __setattr__(self, name, value):
        raise AttributeError("Algebra is immutable")

    @property
    def dim(self) -> int:
        return self.table.shape[0]

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, Algebra):
            return NotImplemented
        return self.field == other.field and self.table.shape == other.table.shape and bool(
            np.array_equal(self.table, other.table)
        )

    def __hash__(self):
        return hash((self.field, self.dim, tuple(self.table.reshape(-1).tolist())))

    def __repr__(self):
        name = f" {self.label!r}" if self.label else ""
        return f"<Algebra{name} dim={self.dim} over {self.field}>"

    # elements

    def element(self, coords) -> "Element":
        return Element(self, coords)

    def basis(self, i: int) -> "Element":
        coords = self.field.zeros(self.dim)
        coords[i] = self.field.raw(1)
        return Element(self, coords)

    def zero(self) -> "Element":
        return Element(self, self.field.zeros(self.dim))

    def elements(self) -> Iterable["Element"]:
        """Every element of a finite algebra, in lexicographic coordinate order."""
        for coords in itertools.product(self.field.elements(), repeat=self.dim):
            yield Element(self, list(coords))

    # operators

    def left_multiplication(self, s: "Element") -> "LinOp":
        """Matrix of ``a -> s a``."""
        _require_same(self, s.algebra)
        return LinOp(self, self.field.normalize(np.einsum("x,xjk->kj", s.coords, self.table)))

    def right_multiplication(self, s: "Element") -> "LinOp":
        """Matrix of ``a -> a s``."""
        _require_same(self, s.algebra)
        return LinOp(self, self.field.normalize(np.einsum("y,jyk->kj", s.coords, self.table)))

    # basis changes

    def permuted(self, perm: Sequence[int]) -> "Algebra":
        """The same algebra on the reordered basis ``e'_i = e_{perm[i]}``."""
        perm = list(perm)
        if sorted(perm) != list(range(self.dim)):
            raise DimensionMismatch(f"{perm} is not a permutation of range({self.dim})")
        t = self.table[np.ix_(perm, perm, perm)]
        return Algebra(self.field, t, self.label, verify=False)

    def opposite(self) -> "Algebra":
        return Algebra(self.field, np.transpose(self.table, (1, 0, 2)), self.label, verify=False)

    def to_json(self) -> dict:
        enc = self.field.encode
        n = self.dim
        out = {"field": self.field.to_json(), "dim": n}
        if self.label:
            out["label"] = self.label
        out["structure_constants"] = [[[enc(x) for x in self.table[i, j]] for j in range(n)] for i in range(n)]
        return out


def _require_same(a: Algebra, b: Algebra, exc=AlgebraMismatch):
    if a is not b and a != b:
        raise exc(f"{a!r} and {b!r} differ")


# -- elements ----------------------------------------------------------------


class Element:
    """A vector of coordinates in the basis of an :class:`Algebra`.

    ``a * b`` is the algebra product; multiplying by a scalar (an int,
    Fraction or :class:`Scalar`) rescales.
    """

    __slots__ = ("algebra", "coords")

    def __init__(self, algebra: Algebra, coords):
        coords = algebra.field.array(coords)
        if coords.shape != (algebra.dim,):
            raise DimensionMismatch(f"expected {algebra.dim} coordinates, got shape {coords.shape}")
        object.__setattr__(self, "algebra", algebra)
        object.__setattr__(self, "coords", _frozen(coords))

    def __setattr__(self, name, value):
        raise AttributeError("Element is immutable")

    @property
    def field(self) -> Field:
        return self.algebra.field

    def _peer(self, other: "Element") -> np.ndarray:
        if not isinstance(other, Element):
            raise TypeError(f"expected an Element, got {type(other).__name__}")
        _require_same(self.algebra, other.algebra)
        return other.coords

    def __add__(self, other):
        return Element(self.algebra, self.field.normalize(self.coords + self._peer(other)))

    def __sub__(self, other):
        return Element(self.algebra, self.field.normalize(self.coords - self._peer(other)))

    def __neg__(self):
        return Element(self.algebra, self.field.normalize(-self.coords))

    def __mul__(self, other):
        if isinstance(other, Element):
            return multiply(self, other)
        return Element(self.algebra, self.field.scale(self.coords, other))

    def __rmul__(self, other):
        return Element(self.algebra, self.field.scale(self.coords, other))

    def __eq__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        return self.algebra == other.algebra and bool(np.array_equal(self.coords, other.coords))

    def __hash__(self):
        return hash(tuple(self.coords.tolist()))

    def __getitem__(self, i: int) -> Scalar:
        return Scalar(self.coords[i], self.field)

    def __len__(self):
        return self.algebra.dim

    def __iter__(self):
        return (Scalar(x, self.field) for x in self.coords)

    def is_zero(self) -> bool:
        return not np.any(np.not_equal(self.coords, 0))

    def __repr__(self):
        return f"Element([{', '.join(str(self.field.encode(x)) for x in self.coords)}])"

    def to_json(self) -> list:
        return [self.field.encode(x) for x in self.coords]


def multiply(a: Element, b: Element) -> Element:
    """Bilinear extension of the structure constants: ``(ab)_k = sum a_i b_j c_ijk``."""
    a._peer(b)
    A = a.algebra
    ab = A.field.normalize(np.einsum("i,ijk->jk", a.coords, A.table))
    return Element(A, A.field.normalize(np.einsum("j,jk->k", b.coords, ab)))


# -- linear operators --------------------------------------------------------


class LinOp:
    """A linear operator on an algebra; column ``j`` of ``matrix`` is the image of ``e_j``."""

    __slots__ = ("algebra", "matrix")

    def __init__(self, algebra: Algebra, matrix):
        m = algebra.field.array(matrix)
        if m.shape != (algebra.dim, algebra.dim):
            raise DimensionMismatch(f"expected a {algebra.dim}x{algebra.dim} matrix, got shape {m.shape}")
        object.__setattr__(self, "algebra", algebra)
        object.__setattr__(self, "matrix", _frozen(m))

    def __setattr__(self, name, value):
        raise AttributeError("LinOp is immutable")

    @classmethod
    def from_images(cls, algebra: Algebra, images) -> "LinOp":
        """Build from the list of images ``T(e_0), ..., T(e_{n-1})``."""
        cols = [im.coords if isinstance(im, Element) else algebra.field.array(im) for im in images]
        return cls(algebra, np.stack(cols, axis=1) if cols else [])

    @property
    def field(self) -> Field:
        return self.algebra.field

    def _peer(self, other: "LinOp") -> np.ndarray:
        if not isinstance(other, LinOp):
            raise TypeError(f"expected a LinOp, got {type(other).__name__}")
        _require_same(self.algebra, other.algebra, DimensionMismatch)
        return other.matrix

    def __call__(self, a: Element) -> Element:
        return apply(self, a)

    def __matmul__(self, other: "LinOp") -> "LinOp":
        return compose(self, other)

    def __add__(self, other):
        return LinOp(self.algebra, self.field.normalize(self.matrix + self._peer(other)))

    def __sub__(self, other):
        return LinOp(self.algebra, self.field.normalize(self.matrix - self._peer(other)))

    def __neg__(self):
        return LinOp(self.algebra, self.field.normalize(-self.matrix))

    def __mul__(self, s):
        if isinstance(s, (LinOp, Element)):
            return NotImplemented
        return LinOp(self.algebra, self.field.scale(self.matrix, s))

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, LinOp):
            return NotImplemented
        return self.algebra == other.algebra and bool(np.array_equal(self.matrix, other.matrix))

    def __hash__(self):
        return hash(tuple(self.matrix.reshape(-1).tolist()))

    def is_zero(self) -> bool:
        return not np.any(np.not_equal(self.matrix, 0))

    def __repr__(self):
        rows = "; ".join(" ".join(str(self.field.encode(x)) for x in row) for row in self.matrix)
        return f"LinOp([{rows}])"

    def to_json(self) -> dict:
        return {"matrix": [[self.field.encode(x) for x in col] for col in self.matrix.T]}


def apply(T: LinOp, a: Element) -> Element:
    if not isinstance(a, Element):
        raise TypeError(f"expected an Element, got {type(a).__name__}")
    _require_same(T.algebra, a.algebra, DimensionMismatch)
    return Element(a.algebra, T.field.normalize(np.einsum("kj,j->k", T.matrix, a.coords)))


def compose(T: LinOp, U: LinOp) -> LinOp:
    """``T o U`` (apply ``U`` first)."""
    return LinOp(T.algebra, T.field.normalize(np.einsum("ij,jk->ik", T.matrix, T._peer(U))))


def identity_op(A: Algebra) -> LinOp:
    return LinOp(A, A.field.identity(A.dim))


def zero_op(A: Algebra) -> LinOp:
    return LinOp(A, A.field.zeros((A.dim, A.dim)))


# -- structure checks --------------------------------------------------------


def check_associative(A: Algebra) -> CheckReport:
    """Compare ``(e_i e_j) e_k`` with ``e_i (e_j e_k)`` on all ``n^3`` basis triples."""
    c = A.table
    lhs = nest_right(A.field, c, c)
    rhs = nest_left(A.field, c, c)
    return CheckReport(A.field, compare("associativity", lhs, rhs))


def find_unit(A: Algebra) -> Element | None:
    """The two-sided unit of ``A``, or ``None`` when there is none.

    Solves ``u e_i = e_i = e_i u`` for all ``i``: ``2 n^2`` linear equations in
    the ``n`` coordinates of ``u``.
    """
    n, c, F = A.dim, A.table, A.field
    rows, rhs = [], []
    for i in range(n):
        for k in range(n):
            target = 1 if i == k else 0
            rows.append([c[a, i, k] for a in range(n)])
            rhs.append(target)
            rows.append([c[i, a, k] for a in range(n)])
            rhs.append(target)
    x = solve(F, rows, rhs)
    if x is None:
        return None
    u = Element(A, x)
    # a consistent system with free variables would not give a unit
    if any(multiply(u, A.basis(i)) != A.basis(i) or multiply(A.basis(i), u) != A.basis(i) for i in range(n)):
        return None
    return u
