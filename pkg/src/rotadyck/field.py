"""Exact scalar arithmetic over the rationals and prime fields F_p.

A :class:`Field` describes the ground field.  Internally field elements are
kept as *raw* Python values -- :class:`fractions.Fraction` for the rationals,
an ``int`` in ``range(p)`` for F_p -- so that whole tensors can live in numpy
arrays.  :class:`Scalar` wraps a raw value together with its field for the
user-facing API (weights, roots, homothety factors).

Arrays over F_p use ``int64`` when ``p`` is small enough that a contraction of
three factors over a few hundred terms cannot overflow; otherwise they fall
back to object arrays of Python ints.  Rational arrays are always object
arrays of ``Fraction``.
"""

from __future__ import annotations

import math
import numbers
import operator
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Iterator

import numpy as np

from .errors import DivisionByZero, FieldMismatch, InvalidInput

__all__ = ["Field", "Q", "GF", "Scalar", "scalar_arith", "sqrt"]

# p^3 * 1024 must stay below 2**63 for int64 contractions
_INT64_PRIME_LIMIT = 1 << 17


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    for d in range(3, math.isqrt(p) + 1, 2):
        if p % d == 0:
            return False
    return True


@dataclass(frozen=True)
class Field:
    """Ground field descriptor: ``Field()`` is Q, ``Field(p)`` is F_p."""

    p: int | None = None

    def __post_init__(self):
        if self.p is None:
            return
        if isinstance(self.p, bool) or not isinstance(self.p, numbers.Integral):
            raise InvalidInput(f"modulus must be an integer, got {self.p!r}")
        object.__setattr__(self, "p", int(self.p))
        if not 2 <= self.p < 2**31:
            raise InvalidInput(f"modulus {self.p} outside [2, 2^31)")
        if not _is_prime(self.p):
            raise InvalidInput(f"modulus {self.p} is not prime")

    # -- descriptors -----------------------------------------------------

    @property
    def kind(self) -> str:
        return "Q" if self.p is None else "Fp"

    @property
    def is_prime_field(self) -> bool:
        return self.p is not None

    @property
    def characteristic(self) -> int:
        return 0 if self.p is None else self.p

    @property
    def dtype(self):
        if self.p is not None and self.p < _INT64_PRIME_LIMIT:
            return np.int64
        return object

    def __str__(self):
        return "Q" if self.p is None else f"F_{self.p}"

    def __repr__(self):
        return "Q" if self.p is None else f"GF({self.p})"

    # -- raw values ------------------------------------------------------

    def raw(self, value: Any):
        """Coerce ``value`` to a normalized raw element of this field."""
        if isinstance(value, Scalar):
            if value.field != self:
                raise FieldMismatch(f"scalar over {value.field} used in {self}")
            return value.value
        if isinstance(value, (bool, np.bool_)):
            raise InvalidInput(f"booleans are not field elements: {value!r}")
        if isinstance(value, str):
            try:
                value = Fraction(value.strip())
            except (ValueError, ZeroDivisionError) as exc:
                raise InvalidInput(f"cannot parse scalar {value!r}") from exc
        if isinstance(value, (float, np.floating)):
            raise InvalidInput(f"floating-point value {value!r} is not exact")
        if isinstance(value, numbers.Integral):
            value = int(value)
            return Fraction(value) if self.p is None else value % self.p
        if isinstance(value, Fraction):
            if self.p is None:
                return value
            den = value.denominator % self.p
            if den == 0:
                raise DivisionByZero(f"{value} has a denominator divisible by {self.p}")
            return value.numerator * pow(den, -1, self.p) % self.p
        raise InvalidInput(f"cannot interpret {value!r} as an element of {self}")

    def inverse(self, x):
        if x == 0:
            raise DivisionByZero(f"0 has no inverse in {self}")
        if self.p is None:
            return 1 / Fraction(x)
        return pow(int(x), -1, self.p)

    def reduce(self, x):
        """Normalize the result of raw integer/fraction arithmetic."""
        if self.p is None:
            return Fraction(x)
        return int(x) % self.p

    def elements(self) -> Iterator[int]:
        if self.p is None:
            raise InvalidInput("Q has no finite element list")
        return iter(range(self.p))

    def __call__(self, value: Any) -> "Scalar":
        return Scalar(self.raw(value), self)

    @property
    def zero(self) -> "Scalar":
        return self(0)

    @property
    def one(self) -> "Scalar":
        return self(1)

    # -- arrays ----------------------------------------------------------

    def array(self, data) -> np.ndarray:
        """Build a normalized array over this field from nested data."""
        if isinstance(data, np.ndarray) and data.dtype == np.int64 and self.dtype is np.int64:
            return np.mod(data, self.p)
        arr = np.asarray(data, dtype=object)
        flat = [self.raw(x) for x in arr.reshape(-1)]
        out = np.empty(len(flat), dtype=object)
        out[:] = flat
        return out.reshape(arr.shape).astype(self.dtype)

    def normalize(self, arr: np.ndarray) -> np.ndarray:
        if self.p is None:
            return arr
        return np.mod(arr, self.p)

    def zeros(self, shape) -> np.ndarray:
        if self.dtype is object:
            out = np.empty(shape, dtype=object)
            out.fill(Fraction(0) if self.p is None else 0)
            return out
        return np.zeros(shape, dtype=self.dtype)

    def identity(self, n: int) -> np.ndarray:
        out = self.zeros((n, n))
        for i in range(n):
            out[i, i] = self.raw(1)
        return out

    def scale(self, arr: np.ndarray, s) -> np.ndarray:
        s = self.raw(s)
        if self.dtype is object:
            return self.normalize(arr * s)
        return self.normalize(arr * np.int64(s))

    # -- square roots ----------------------------------------------------

    def sqrt(self, x) -> "Scalar | None":
        """Canonical square root of ``x`` or ``None`` when none exists.

        Over Q the non-negative root is returned; over F_p the smallest
        residue whose square is ``x`` (found by exhaustive search).
        """
        x = self.raw(x)
        if self.p is None:
            if x < 0:
                return None
            num, den = math.isqrt(x.numerator), math.isqrt(x.denominator)
            if num * num != x.numerator or den * den != x.denominator:
                return None
            return Scalar(Fraction(num, den), self)
        for s in range(self.p):
            if s * s % self.p == x:
                return Scalar(s, self)
        return None

    # -- JSON ------------------------------------------------------------

    def encode(self, x) -> str | int:
        x = self.raw(x)
        if self.p is not None:
            return int(x)
        return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"

    def decode(self, data) -> Any:
        if isinstance(data, bool) or not isinstance(data, (str, int)):
            raise InvalidInput(f"bad scalar encoding {data!r} for {self}")
        return self.raw(data)

    def to_json(self) -> dict:
        return {"type": "Q"} if self.p is None else {"type": "Fp", "p": self.p}

    @classmethod
    def from_json(cls, data) -> "Field":
        if not isinstance(data, dict) or data.get("type") not in ("Q", "Fp"):
            raise InvalidInput(f"bad field descriptor {data!r}")
        if data["type"] == "Q":
            return cls()
        p = data.get("p")
        if isinstance(p, bool) or not isinstance(p, int):
            raise InvalidInput(f"bad prime modulus {p!r}")
        return cls(p)


Q = Field()


def GF(p: int) -> Field:
    return Field(p)


class Scalar:
    """An immutable element of a :class:`Field`.

    Plain ints and Fractions are coerced into the scalar's field; mixing two
    scalars over different fields raises :class:`FieldMismatch`.
    """

    __slots__ = ("value", "field")

    def __init__(self, value, field: Field):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "value", field.raw(value))

    def __setattr__(self, name, value):
        raise AttributeError("Scalar is immutable")

    def _other(self, other):
        if isinstance(other, Scalar):
            if other.field != self.field:
                raise FieldMismatch(f"cannot combine {self.field} and {other.field} scalars")
            return other.value
        if isinstance(other, (numbers.Integral, Fraction)) and not isinstance(other, bool):
            return self.field.raw(other)
        return NotImplemented

    def _wrap(self, raw):
        return Scalar(self.field.reduce(raw), self.field)

    def __add__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.value + o)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.value - o)

    def __rsub__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._wrap(o - self.value)

    def __mul__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.value * o)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return NotImplemented
        return self._wrap(self.value * self.field.inverse(o))

    def __rtruediv__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return NotImplemented
        return self._wrap(o * self.field.inverse(self.value))

    def __neg__(self):
        return self._wrap(-self.value)

    def __pos__(self):
        return self

    def __pow__(self, k: int):
        if k < 0:
            return (1 / self) ** -k
        out = self.field.one
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self.field == other.field and self.value == other.value
        if isinstance(other, (numbers.Integral, Fraction)) and not isinstance(other, bool):
            return self.value == self.field.raw(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.field))

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return f"Scalar({self.field.encode(self.value)!r}, {self.field!r})"

    def __str__(self):
        return str(self.field.encode(self.value))

    def sqrt(self) -> "Scalar | None":
        return self.field.sqrt(self)

    def to_json(self):
        return self.field.encode(self.value)


_OPS = {"add": operator.add, "sub": operator.sub, "mul": operator.mul, "div": operator.truediv}


def scalar_arith(x: Scalar, y: Scalar, op: str) -> Scalar:
    """Apply ``op`` (one of add, sub, mul, div) to two scalars of one field."""
    if not isinstance(x, Scalar) or not isinstance(y, Scalar):
        raise InvalidInput("scalar_arith expects two Scalar arguments")
    if x.field != y.field:
        raise FieldMismatch(f"cannot combine {x.field} and {y.field} scalars")
    try:
        return _OPS[op](x, y)
    except KeyError:
        raise InvalidInput(f"unknown scalar operation {op!r}") from None


def sqrt(x: Scalar) -> Scalar | None:
    return x.field.sqrt(x)
