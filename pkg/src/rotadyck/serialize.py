"""JSON encodings and the workspace file format.

A workspace is a single JSON document holding named objects::

    {
      "algebras":  {"A": <algebra>},
      "operators": {"R": {"algebra": "A", "matrix": [...]},
                    "sigma": {"algebra": "A", "left": [...], "right": [...]}},
      "scalars":   {"alpha": "3", "beta": "2"},
      "targets":   {"gen": {"algebra": "A", "Rbar": "Rbar", "alpha": "alpha", "beta": "beta"}},
      "dyck":      {"D": <dyck algebra>}
    }

Targets bundle the objects a predicate or construction needs; each role
(``R``, ``S``, ``Rbar``, ``N``, ``sigma``, ``lambda``, ``alpha``, ``beta``)
names an entry of ``operators`` or ``scalars``.  Scalars are stored in their
JSON encoding and interpreted in the field of the target's algebra.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from .algebra import Algebra, LinOp
from .dyck import DyckAlgebra
from .errors import DimensionMismatch, InvalidInput
from .field import Field, Scalar
from .homothetism import DoubleOperator

OPERATOR_ROLES = ("R", "S", "Rbar", "N")
SCALAR_ROLES = ("lambda", "alpha", "beta")


class WorkspaceError(InvalidInput):
    """A workspace file is malformed or has a dangling reference."""


def _require(data: Any, key: str, where: str):
    if not isinstance(data, dict) or key not in data:
        raise WorkspaceError(f"{where}: missing key {key!r}")
    return data[key]


def _field_and_dim(data: dict, where: str) -> tuple[Field, int]:
    field = Field.from_json(_require(data, "field", where))
    dim = _require(data, "dim", where)
    if isinstance(dim, bool) or not isinstance(dim, int) or dim < 1:
        raise WorkspaceError(f"{where}: bad dimension {dim!r}")
    return field, dim


def _tensor(field: Field, data, n: int, where: str):
    if not isinstance(data, list) or len(data) != n:
        raise WorkspaceError(f"{where}: expected {n} rows of structure constants")
    out = []
    for i, row in enumerate(data):
        if not isinstance(row, list) or len(row) != n:
            raise WorkspaceError(f"{where}[{i}]: expected {n} products")
        out_row = []
        for j, vec in enumerate(row):
            if not isinstance(vec, list) or len(vec) != n:
                raise WorkspaceError(f"{where}[{i}][{j}]: expected {n} coordinates")
            out_row.append([field.decode(x) for x in vec])
        out.append(out_row)
    return out


def algebra_from_json(data: dict, where: str = "algebra") -> Algebra:
    """Load an algebra; non-associative tables raise :class:`NotAssociative`."""
    field, n = _field_and_dim(data, where)
    c = _tensor(field, _require(data, "structure_constants", where), n, where)
    return Algebra(field, c, data.get("label"))


def _matrix(A: Algebra, cols, where: str):
    n = A.dim
    if not isinstance(cols, list) or len(cols) != n or any(not isinstance(c, list) or len(c) != n for c in cols):
        raise WorkspaceError(f"{where}: expected {n} columns of {n} scalars")
    # columns in the file, rows x columns in memory
    return [[A.field.decode(cols[j][i]) for j in range(n)] for i in range(n)]


def linop_from_json(A: Algebra, data: dict, where: str = "operator") -> LinOp:
    return LinOp(A, _matrix(A, _require(data, "matrix", where), where))


def double_from_json(A: Algebra, data: dict, where: str = "double operator") -> DoubleOperator:
    left = LinOp(A, _matrix(A, _require(data, "left", where), where + ".left"))
    right = LinOp(A, _matrix(A, _require(data, "right", where), where + ".right"))
    return DoubleOperator(left, right)


def dyck_from_json(data: dict, where: str = "dyck") -> DyckAlgebra:
    field, n = _field_and_dim(data, where)
    m = _require(data, "m", where)
    products = _require(data, "products", where)
    if isinstance(m, bool) or not isinstance(m, int) or m < 0:
        raise WorkspaceError(f"{where}: bad level {m!r}")
    if not isinstance(products, list) or len(products) != m + 1:
        raise WorkspaceError(f"{where}: expected {m + 1} product tensors")
    tensors = [_tensor(field, t, n, f"{where}.products[{i}]") for i, t in enumerate(products)]
    return DyckAlgebra(field, tensors, data.get("label"))


def operator_to_json(op: LinOp | DoubleOperator, algebra_name: str | None = None) -> dict:
    out = {"algebra": algebra_name} if algebra_name is not None else {}
    out.update(op.to_json())
    return out


class Workspace:
    """Named algebras, operators, scalars, targets and Dyck algebras."""

    def __init__(self):
        self.algebras: dict[str, Algebra] = {}
        self.operators: dict[str, LinOp | DoubleOperator] = {}
        self.operator_algebra: dict[str, str] = {}
        self.scalars: dict[str, Any] = {}
        self.targets: dict[str, dict[str, str]] = {}
        self.dyck: dict[str, DyckAlgebra] = {}
        self.report: Any = None

    # building

    def add_algebra(self, name: str, A: Algebra) -> str:
        for existing, B in self.algebras.items():
            if B is A:
                return existing
        self.algebras[name] = A
        return name

    def add_operator(self, name: str, op: LinOp | DoubleOperator, algebra_name: str) -> str:
        if algebra_name not in self.algebras or self.algebras[algebra_name] != op.algebra:
            raise WorkspaceError(f"operator {name!r} is not over algebra {algebra_name!r}")
        self.operators[name] = op
        self.operator_algebra[name] = algebra_name
        return name

    def add_scalar(self, name: str, value: Scalar) -> str:
        self.scalars[name] = value.to_json() if isinstance(value, Scalar) else value
        return name

    def add_target(self, name: str, **roles: str) -> str:
        self.targets[name] = dict(roles)
        return name

    # loading

    @classmethod
    def from_json(cls, data: Any) -> "Workspace":
        if not isinstance(data, dict):
            raise WorkspaceError("workspace must be a JSON object")
        ws = cls()
        for name, spec in data.get("algebras", {}).items():
            ws.algebras[name] = algebra_from_json(spec, f"algebras.{name}")
        for name, spec in data.get("operators", {}).items():
            alg = _require(spec, "algebra", f"operators.{name}")
            if alg not in ws.algebras:
                raise WorkspaceError(f"operators.{name}: unknown algebra {alg!r}")
            A = ws.algebras[alg]
            where = f"operators.{name}"
            ws.operators[name] = double_from_json(A, spec, where) if "left" in spec else linop_from_json(A, spec, where)
            ws.operator_algebra[name] = alg
        ws.scalars = dict(data.get("scalars", {}))
        for name, spec in data.get("dyck", {}).items():
            ws.dyck[name] = dyck_from_json(spec, f"dyck.{name}")
        for name, roles in data.get("targets", {}).items():
            if not isinstance(roles, dict) or not all(isinstance(v, str) for v in roles.values()):
                raise WorkspaceError(f"targets.{name}: roles must map to object names")
            ws.targets[name] = dict(roles)
            ws.resolve(name)  # fail fast on dangling references
        ws.report = data.get("report")
        return ws

    @classmethod
    def load(cls, path: str | Path) -> "Workspace":
        try:
            data = json.loads(Path(path).read_text(encoding="utf-8"))
        except json.JSONDecodeError as exc:
            raise WorkspaceError(f"{path}: invalid JSON ({exc})") from exc
        return cls.from_json(data)

    def resolve(self, name: str) -> dict[str, Any]:
        """Objects of target ``name`` by role, plus ``"algebra"``."""
        if name not in self.targets:
            raise WorkspaceError(f"unknown target {name!r}")
        roles = self.targets[name]
        alg = roles.get("algebra")
        if alg not in self.algebras:
            raise WorkspaceError(f"targets.{name}: unknown algebra {alg!r}")
        A = self.algebras[alg]
        out: dict[str, Any] = {"algebra": A}
        for role, ref in roles.items():
            if role == "algebra":
                continue
            if role in SCALAR_ROLES:
                if ref not in self.scalars:
                    raise WorkspaceError(f"targets.{name}.{role}: unknown scalar {ref!r}")
                out[role] = A.field(A.field.decode(self.scalars[ref]))
            elif role in OPERATOR_ROLES or role == "sigma":
                op = self.operators.get(ref)
                if op is None:
                    raise WorkspaceError(f"targets.{name}.{role}: unknown operator {ref!r}")
                if (role == "sigma") != isinstance(op, DoubleOperator):
                    raise WorkspaceError(f"targets.{name}.{role}: {ref!r} has the wrong operator kind")
                if op.algebra != A:
                    raise DimensionMismatch(f"targets.{name}.{role}: {ref!r} is not over {alg!r}")
                out[role] = op
            else:
                raise WorkspaceError(f"targets.{name}: unknown role {role!r}")
        return out

    # writing

    def to_json(self) -> dict:
        out: dict[str, Any] = {}
        if self.algebras:
            out["algebras"] = {k: A.to_json() for k, A in self.algebras.items()}
        if self.operators:
            out["operators"] = {k: operator_to_json(op, self.operator_algebra[k]) for k, op in self.operators.items()}
        if self.scalars:
            out["scalars"] = dict(self.scalars)
        if self.targets:
            out["targets"] = {k: dict(v) for k, v in self.targets.items()}
        if self.dyck:
            out["dyck"] = {k: D.to_json() for k, D in self.dyck.items()}
        if self.report is not None:
            out["report"] = self.report
        return out

    def dumps(self) -> str:
        return dumps(self.to_json())

    def save(self, path: str | Path) -> None:
        Path(path).write_text(self.dumps(), encoding="utf-8")


def dumps(data: Any) -> str:
    return json.dumps(data, indent=2) + "\n"
