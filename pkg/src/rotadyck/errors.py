"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations


class AlgebraError(Exception):
    """Base class for all errors raised by rotadyck."""


class FieldMismatch(AlgebraError, TypeError):
    """Arithmetic was attempted between scalars of different fields."""


class DivisionByZero(AlgebraError, ZeroDivisionError):
    pass


class AlgebraMismatch(AlgebraError, ValueError):
    """Objects living over different algebras were combined."""


class DimensionMismatch(AlgebraError, ValueError):
    pass


class NotAssociative(AlgebraError, ValueError):
    """Raised by the loader when a structure-constant table is not associative.

    ``violations`` holds every offending basis triple ``(i, j, k)``.
    """

    def __init__(self, violations, label=None):
        self.violations = list(violations)
        what = f"algebra {label!r}" if label else "algebra"
        shown = ", ".join(str(v) for v in self.violations[:5])
        more = "" if len(self.violations) <= 5 else f" (+{len(self.violations) - 5} more)"
        super().__init__(f"{what} is not associative at basis triples {shown}{more}")


class InvalidInput(AlgebraError, ValueError):
    pass


class UnsupportedLevel(AlgebraError, ValueError):
    pass


class IndexOutOfRange(AlgebraError, IndexError):
    pass


class SpaceTooLarge(AlgebraError):
    """A brute-force search would exceed its candidate guard."""

    def __init__(self, count: int, guard: int):
        self.count = count
        self.guard = guard
        super().__init__(f"candidate space of size {count} exceeds guard {guard}")


class NoRootsInField(AlgebraError):
    """``t^2 - alpha t + beta`` has no roots in the ground field."""

    def __init__(self, discriminant):
        self.discriminant = discriminant
        super().__init__(f"discriminant {discriminant} has no square root in the field")
