"""Exhaustive searches for operators satisfying the predicates over small F_p.

Every tuple of ``k`` matrices over F_p is a candidate; candidates are
numbered in row-major scalar order (the first matrix's ``[0, 0]`` entry is the
most significant digit) and scanned in that order, in vectorized chunks.
The inline chunk checks are written independently of the public predicates
in :mod:`rotadyck.rota_baxter` and :mod:`rotadyck.homothetism`; every hit is
re-verified through those public predicates before it is reported.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field as dc_field
from enum import Enum
from typing import Any, Callable, Iterable

import numpy as np

from .algebra import Algebra, LinOp
from .dyck import build_dyck, check_dyck_axioms, check_theorem_proof_identities
from .errors import AlgebraError, InvalidInput, SpaceTooLarge
from .field import Scalar
from .homothetism import (
    DoubleOperator,
    HomotheticRBSystem,
    check_bimultiplication,
    check_homothetic_compat,
    check_self_permutable,
    gamma_from_weights,
    scalar_homothetism,
    zero_homothetism,
)
from .rota_baxter import (
    GeneralizedRBOperator,
    OperatorPair,
    RBSystem,
    WeightedRBOperator,
    check_generalized_rb,
    check_nijenhuis,
    check_rb_system,
    check_rb_weight,
    from_generalized,
    from_weighted,
    nijenhuis_embedding,
)

__all__ = ["Target", "SearchSpec", "SearchResult", "enumerate_space", "cross_validate", "DEFAULT_GUARD", "default_guard"]

DEFAULT_GUARD = 10**7
CHUNK = 1 << 14
DYCK_LEVELS = tuple(range(1, 7))


def default_guard() -> int:
    """The candidate guard, overridable through the ``RD_GUARD`` environment variable."""
    raw = os.environ.get("RD_GUARD")
    if raw is None:
        return DEFAULT_GUARD
    try:
        value = int(raw)
    except ValueError:
        raise InvalidInput(f"RD_GUARD must be an integer, got {raw!r}") from None
    if value < 0:
        raise InvalidInput("RD_GUARD must be non-negative")
    return value


class Target(str, Enum):
    WEIGHTED_RB = "weighted-rb"
    GENERALIZED_RB = "generalized-rb"
    RB_SYSTEM = "rb-system"
    BIMULTIPLICATION = "bimult"
    SELF_PERMUTABLE_BIMULT = "self-permutable-bimult"
    HOMOTHETIC_TRIPLE = "homothetic-triple"

    @property
    def matrices(self) -> int:
        return _MATRICES[self]


_MATRICES = {
    Target.WEIGHTED_RB: 1,
    Target.GENERALIZED_RB: 1,
    Target.RB_SYSTEM: 2,
    Target.BIMULTIPLICATION: 2,
    Target.SELF_PERMUTABLE_BIMULT: 2,
    Target.HOMOTHETIC_TRIPLE: 4,
}


@dataclass(frozen=True)
class SearchSpec:
    algebra: Algebra
    target: Target
    lam: Scalar | None = None
    alpha: Scalar | None = None
    beta: Scalar | None = None
    guard: int = DEFAULT_GUARD

    def __post_init__(self):
        F = self.algebra.field
        if not F.is_prime_field:
            raise InvalidInput("searches run over prime fields only")
        if F.dtype is object:
            raise InvalidInput(f"prime {F.p} is too large for exhaustive search")
        object.__setattr__(self, "target", Target(self.target))
        for name in ("lam", "alpha", "beta"):
            value = getattr(self, name)
            if value is not None and not isinstance(value, Scalar):
                object.__setattr__(self, name, F(value))
        if self.target is Target.WEIGHTED_RB and self.lam is None:
            raise InvalidInput("weighted-rb search needs a weight lam")
        if self.target is Target.GENERALIZED_RB and (self.alpha is None or self.beta is None):
            raise InvalidInput("generalized-rb search needs weights alpha and beta")

    @property
    def candidate_count(self) -> int:
        n = self.algebra.dim
        return self.algebra.field.p ** (n * n * self.target.matrices)

    def params(self) -> dict:
        out = {}
        if self.target is Target.WEIGHTED_RB:
            out["lambda"] = self.lam.to_json()
        if self.target is Target.GENERALIZED_RB:
            out["alpha"] = self.alpha.to_json()
            out["beta"] = self.beta.to_json()
        return out

    def to_json(self) -> dict:
        return {
            "algebra": self.algebra.to_json(),
            "target": self.target.value,
            "params": self.params(),
            "guard": self.guard,
        }


@dataclass
class SearchResult:
    spec: SearchSpec
    hits: list[tuple] = dc_field(default_factory=list)
    total_scanned: int = 0

    def to_json(self) -> dict:
        return {
            "spec": self.spec.to_json(),
            "total_scanned": self.total_scanned,
            "hits": [[op.to_json() for op in hit] for hit in self.hits],
        }


# -- vectorized inline checks ------------------------------------------------


class _Batch:
    """Arithmetic mod p on stacks of operators; ``z`` indexes candidates."""

    def __init__(self, A: Algebra):
        self.p = A.field.p
        self.c = A.table.astype(np.int64)
        self.n = A.dim

    def prod(self, X=None, Y=None):
        """``[z, i, j, :] = X_z(e_i) * Y_z(e_j)``; None means the identity."""
        c = self.c
        if X is None and Y is None:
            return c[None]
        if X is None:
            return np.einsum("zyj,iyk->zijk", Y, c) % self.p
        if Y is None:
            return np.einsum("zxi,xjk->zijk", X, c) % self.p
        t = np.einsum("zxi,xyk->ziyk", X, c) % self.p
        return np.einsum("zyj,ziyk->zijk", Y, t) % self.p

    def image(self, M, t):
        """Apply ``M_z`` to the coordinate axis of ``t[z, i, j, :]``."""
        if t.shape[0] == 1 and M.shape[0] != 1:
            t = np.broadcast_to(t, (M.shape[0],) + t.shape[1:])
        return np.einsum("zkl,zijl->zijk", M, t) % self.p

    def equal(self, x, y):
        x = np.broadcast_to(x, np.broadcast_shapes(x.shape, y.shape))
        return np.all(((x - y) % self.p).reshape(x.shape[0], -1) == 0, axis=1)

    def matmul(self, X, Y):
        return np.einsum("zij,zjk->zik", X, Y) % self.p

    # predicates

    def weighted(self, R, lam):
        inner = (self.prod(R, None) + self.prod(None, R) + lam * self.prod()) % self.p
        return self.equal(self.prod(R, R), self.image(R, inner))

    def generalized(self, Rb, alpha, beta):
        inner = (self.prod(Rb, None) + self.prod(None, Rb) + alpha * self.prod()) % self.p
        return self.equal(self.prod(Rb, Rb), (self.image(Rb, inner) + beta * self.prod()) % self.p)

    def system(self, R, S):
        inner = (self.prod(R, None) + self.prod(None, S)) % self.p
        return self.equal(self.prod(R, R), self.image(R, inner)) & self.equal(self.prod(S, S), self.image(S, inner))

    def bimult(self, L, Rt):
        c = self.prod()
        ok = self.equal(self.image(L, c), self.prod(L, None))
        ok &= self.equal(self.image(Rt, c), self.prod(None, Rt))
        ok &= self.equal(self.prod(None, L), self.prod(Rt, None))
        return ok

    def commute(self, L, Rt):
        return self.equal(self.matmul(L, Rt), self.matmul(Rt, L))

    def compat(self, R, S, L, Rt):
        lhs = (self.matmul(Rt, S) - self.matmul(L, R)) % self.p
        return self.equal(lhs, self.matmul(L, Rt))


def _decode(start: int, stop: int, p: int, k: int, n: int) -> np.ndarray:
    digits = k * n * n
    idx = np.arange(start, stop, dtype=np.int64)
    weights = p ** np.arange(digits - 1, -1, -1, dtype=np.int64)
    return ((idx[:, None] // weights[None, :]) % p).reshape(-1, k, n, n)


def _inline_mask(spec: SearchSpec, batch: _Batch, mats: np.ndarray) -> np.ndarray:
    t = spec.target
    if t is Target.WEIGHTED_RB:
        return batch.weighted(mats[:, 0], int(spec.lam.value))
    if t is Target.GENERALIZED_RB:
        return batch.generalized(mats[:, 0], int(spec.alpha.value), int(spec.beta.value))
    if t is Target.RB_SYSTEM:
        return batch.system(mats[:, 0], mats[:, 1])
    L, Rt = mats[:, -2], mats[:, -1]
    ok = batch.bimult(L, Rt)
    if t is Target.BIMULTIPLICATION:
        return ok
    ok &= batch.commute(L, Rt)
    if t is Target.SELF_PERMUTABLE_BIMULT:
        return ok
    R, S = mats[:, 0], mats[:, 1]
    return ok & batch.system(R, S) & batch.compat(R, S, L, Rt)


def _package(spec: SearchSpec, mats: np.ndarray) -> tuple:
    A = spec.algebra
    ops = [LinOp(A, m) for m in mats]
    if spec.target in (Target.BIMULTIPLICATION, Target.SELF_PERMUTABLE_BIMULT):
        return (DoubleOperator(ops[0], ops[1]),)
    if spec.target is Target.HOMOTHETIC_TRIPLE:
        return (ops[0], ops[1], DoubleOperator(ops[2], ops[3]))
    return tuple(ops)


def public_check(spec: SearchSpec, hit: tuple) -> bool:
    """Re-check a candidate through the public predicate functions."""
    A, t = spec.algebra, spec.target
    if t is Target.WEIGHTED_RB:
        return check_rb_weight(A, hit[0], spec.lam).passed
    if t is Target.GENERALIZED_RB:
        return check_generalized_rb(A, hit[0], spec.alpha, spec.beta).passed
    if t is Target.RB_SYSTEM:
        return check_rb_system(A, *hit).passed
    sigma = hit[-1]
    ok = check_bimultiplication(sigma).passed
    if t is Target.BIMULTIPLICATION:
        return ok
    ok = ok and check_self_permutable(sigma).passed
    if t is Target.SELF_PERMUTABLE_BIMULT:
        return ok
    R, S = hit[0], hit[1]
    return ok and check_rb_system(A, R, S).passed and check_homothetic_compat(OperatorPair(R, S), sigma).passed


def enumerate_space(spec: SearchSpec, chunk: int = CHUNK) -> SearchResult:
    """Scan the whole candidate space of ``spec``; refuse if it exceeds the guard."""
    count = spec.candidate_count
    if count > spec.guard:
        raise SpaceTooLarge(count, spec.guard)
    A = spec.algebra
    batch = _Batch(A)
    k, n, p = spec.target.matrices, A.dim, A.field.p
    result = SearchResult(spec)
    for start in range(0, count, chunk):
        stop = min(start + chunk, count)
        mats = _decode(start, stop, p, k, n)
        for z in np.flatnonzero(_inline_mask(spec, batch, mats)):
            hit = _package(spec, mats[z])
            if not public_check(spec, hit):
                raise AssertionError(f"candidate {start + z} passed the inline check but fails the predicate")
            result.hits.append(hit)
        result.total_scanned += stop - start
    return result


# -- cross validation --------------------------------------------------------


def _failure(report: dict, hit: int, construction: str, detail: Any) -> None:
    report["failures"].append({"hit": hit, "construction": construction, "detail": detail})


def _attempt(report: dict, hit: int, construction: str, fn: Callable[[], Any]):
    """Run one construction/check; record a failure instead of raising."""
    report["constructions_run"] += 1
    try:
        out = fn()
    except AlgebraError as exc:
        _failure(report, hit, construction, f"{type(exc).__name__}: {exc}")
        return None
    if hasattr(out, "passed") and not out.passed:
        _failure(report, hit, construction, out.to_json())
        return None
    return out


def _dyck_levels(report: dict, hit: int, h: HomotheticRBSystem, levels: Iterable[int], tag: str = "") -> None:
    for m in levels:
        _attempt(report, hit, f"build_dyck(m={m}){tag}", lambda m=m: check_dyck_axioms(build_dyck(h, m)))


def cross_validate(result: SearchResult, levels: Iterable[int] = DYCK_LEVELS) -> dict:
    """Run every downstream construction on every hit and check its output.

    The report lists each construction whose output fails its own checker;
    for a correct implementation ``failures`` is empty.
    """
    levels = tuple(levels)
    spec = result.spec
    A = spec.algebra
    report: dict = {"target": spec.target.value, "hits_checked": 0, "constructions_run": 0, "failures": []}
    for i, hit in enumerate(result.hits):
        report["hits_checked"] += 1
        if not public_check(spec, hit):
            _failure(report, i, "predicate", "hit fails its own predicate")
            continue
        t = spec.target
        if t is Target.WEIGHTED_RB:
            w = WeightedRBOperator(hit[0], spec.lam)
            system = _attempt(report, i, "from_weighted", lambda: from_weighted(w))
            if system is not None:
                sigma = scalar_homothetism(A, spec.lam)
                h = _attempt(report, i, "weighted-homothetic", lambda: HomotheticRBSystem(system, sigma))
                if h is not None:
                    _dyck_levels(report, i, h, levels)
        elif t is Target.GENERALIZED_RB:
            g = GeneralizedRBOperator(hit[0], spec.alpha, spec.beta)
            splits = _attempt(report, i, "from_generalized", lambda: from_generalized(g)) or []
            for split in splits:
                lam, mu = split.lam, split.mu
                tag = f"[lambda={lam},mu={mu}]"
                _attempt(report, i, "rb_system" + tag, lambda: check_rb_system(A, split.system.R, split.system.S))
                if lam + mu != spec.alpha or lam * mu != spec.beta:
                    _failure(report, i, "vieta" + tag, {"lambda": lam.to_json(), "mu": mu.to_json()})
                h = _attempt(report, i, "gamma_from_weights" + tag, lambda: gamma_from_weights(g, (lam, mu)))
                if h is None:
                    continue
                _attempt(report, i, "bimultiplication" + tag, lambda: check_bimultiplication(h.sigma))
                _attempt(report, i, "self_permutable" + tag, lambda: check_self_permutable(h.sigma))
                _attempt(report, i, "compat" + tag, lambda: check_homothetic_compat(h.system, h.sigma))
                _dyck_levels(report, i, h, levels, tag)
        elif t is Target.RB_SYSTEM:
            system = RBSystem(*hit)
            _attempt(report, i, "nijenhuis", lambda: _nijenhuis_check(system))
            h = _attempt(report, i, "zero-homothetic", lambda: HomotheticRBSystem(system, zero_homothetism(A)))
            if h is not None:
                _dyck_levels(report, i, h, levels)
        elif t is Target.HOMOTHETIC_TRIPLE:
            R, S, sigma = hit
            h = _attempt(report, i, "homothetic", lambda: HomotheticRBSystem(RBSystem(R, S), sigma))
            if h is not None:
                _attempt(report, i, "nijenhuis", lambda: _nijenhuis_check(h.system))
                _attempt(report, i, "proof_identities", lambda: check_theorem_proof_identities(h))
                _dyck_levels(report, i, h, levels)
    return report


def _nijenhuis_check(system: RBSystem):
    emb = nijenhuis_embedding(system)
    return check_nijenhuis(emb.B, emb.N)
