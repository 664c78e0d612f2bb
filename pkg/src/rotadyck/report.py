"""Pass/fail reports with localized witnesses."""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

import numpy as np

from .field import Field


@dataclass(frozen=True)
class Violation:
    """One failing instance of an identity.

    ``indices`` are zero-based basis indices; ``lhs`` and ``rhs`` are the raw
    coordinates of both sides of the identity at those indices.
    """

    identity: str
    indices: tuple[int, ...]
    lhs: tuple
    rhs: tuple

    def to_json(self, field: Field) -> dict:
        return {
            "identity": self.identity,
            "indices": list(self.indices),
            "lhs": [field.encode(x) for x in self.lhs],
            "rhs": [field.encode(x) for x in self.rhs],
        }


@dataclass
class CheckReport:
    field: Field
    violations: list[Violation] = dc_field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations

    def __bool__(self):
        return self.passed

    @property
    def witnesses(self) -> list[tuple]:
        return [(v.identity, v.indices) for v in self.violations]

    def failed_identities(self) -> set[str]:
        return {v.identity for v in self.violations}

    def extend(self, other: "CheckReport") -> "CheckReport":
        self.violations.extend(other.violations)
        return self

    def to_json(self) -> dict:
        return {
            "passed": self.passed,
            "violations": [v.to_json(self.field) for v in self.violations],
        }


def compare(identity: str, lhs: np.ndarray, rhs: np.ndarray) -> list[Violation]:
    """Violations where two coordinate tensors differ.

    The last axis of ``lhs``/``rhs`` holds coordinates, the leading axes are
    basis indices.  Results come out in lexicographic index order.
    """
    differs = np.not_equal(lhs, rhs).astype(bool)
    bad = np.argwhere(differs.any(axis=-1)) if differs.ndim else np.empty((0, 0), int)
    return [
        Violation(identity, tuple(int(i) for i in idx), tuple(lhs[tuple(idx)]), tuple(rhs[tuple(idx)]))
        for idx in bad
    ]
