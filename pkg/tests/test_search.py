import itertools
import json

import pytest

from rotadyck import GF, InvalidInput, Q, SpaceTooLarge, Target
from rotadyck.catalog import diagonal, one_dim, small_algebras, truncated_polynomial, zero_algebra
from rotadyck.search import (
    DEFAULT_GUARD,
    SearchSpec,
    _Batch,
    _decode,
    _inline_mask,
    _package,
    cross_validate,
    default_guard,
    enumerate_space,
    public_check,
)
from rotadyck.serialize import dumps

import oracle


def search(A, target, **params):
    return enumerate_space(SearchSpec(A, Target(target), **params))


def scalars(hit):
    return tuple(int(op.matrix[0, 0]) for op in hit)


# -- search contract ---------------------------------------------------------


def test_candidate_counts_and_guard():
    A = diagonal(GF(2), 2)
    assert SearchSpec(A, "rb-system").candidate_count == 256
    assert SearchSpec(A, "homothetic-triple").candidate_count == 2**16
    with pytest.raises(SpaceTooLarge) as info:
        search(A, "homothetic-triple", guard=1000)
    assert info.value.count == 65536 and info.value.guard == 1000


def test_guard_from_environment(monkeypatch):
    monkeypatch.delenv("RD_GUARD", raising=False)
    assert default_guard() == DEFAULT_GUARD == 10**7
    monkeypatch.setenv("RD_GUARD", "12")
    assert default_guard() == 12
    monkeypatch.setenv("RD_GUARD", "lots")
    with pytest.raises(InvalidInput):
        default_guard()


def test_rejects_rationals_and_missing_weights():
    with pytest.raises(InvalidInput):
        SearchSpec(one_dim(Q), "rb-system")
    with pytest.raises(InvalidInput):
        SearchSpec(one_dim(GF(2)), "weighted-rb")
    with pytest.raises(InvalidInput):
        SearchSpec(one_dim(GF(2)), "generalized-rb", alpha=1)
    with pytest.raises(ValueError):
        SearchSpec(one_dim(GF(2)), "no-such-target")


# -- examples --------------------------------------------------------------


def test_weight_zero_on_zero_algebra():
    result = search(zero_algebra(GF(2), 1), "weighted-rb", lam=0)
    assert result.total_scanned == 2
    assert [scalars(h) for h in result.hits] == [(0,), (1,)]


def test_rb_systems_on_K_over_f2():
    result = search(one_dim(GF(2)), "rb-system")
    # both equations reduce to r s = 0
    assert result.total_scanned == 4
    assert [scalars(h) for h in result.hits] == [(0, 0), (0, 1), (1, 0)]


def test_homothetic_census_contains_zero_triple():
    A = truncated_polynomial(GF(2), 2)
    result = search(A, "homothetic-triple")
    R, S, sigma = result.hits[0]
    assert R.is_zero() and S.is_zero() and sigma.left.is_zero() and sigma.right.is_zero()
    assert result.total_scanned == 2**16


# -- completeness on dim 1 (hand-solved) -----------------------------------
# with e^2 = k e and operators r, s:
#   weight lam:         k (r^2 + lam r) = 0
#   weights (al, be):   k (r^2 + al r + be) = 0
#   system:             k r s = 0
#   bimult (l, rt):     k (l - rt) = 0
#   self-permutable:    always


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_dim_one_completeness(p):
    F = GF(p)
    for k in range(p):
        A = one_dim(F, k)
        for lam in range(p):
            hits = [scalars(h) for h in search(A, "weighted-rb", lam=lam).hits]
            assert hits == [(r,) for r in range(p) if k * (r * r + lam * r) % p == 0]
        for al, be in itertools.product(range(p), repeat=2):
            hits = [scalars(h) for h in search(A, "generalized-rb", alpha=al, beta=be).hits]
            assert hits == [(r,) for r in range(p) if k * (r * r + al * r + be) % p == 0]
        hits = [scalars(h) for h in search(A, "rb-system").hits]
        assert hits == [(r, s) for r in range(p) for s in range(p) if k * r * s % p == 0]
        bimult = search(A, "self-permutable-bimult").hits
        assert [(int(h[0].left.matrix[0, 0]), int(h[0].right.matrix[0, 0])) for h in bimult] == [
            (l, rt) for l in range(p) for rt in range(p) if k * (l - rt) % p == 0
        ]


# -- soundness -------------------------------------------------------------


def every_candidate(spec):
    A = spec.algebra
    mats = _decode(0, spec.candidate_count, A.field.p, spec.target.matrices, A.dim)
    mask = _inline_mask(spec, _Batch(A), mats)
    return mats, mask


SMALL_SPACES = [
    (one_dim(GF(3)), "homothetic-triple", {}),
    (zero_algebra(GF(3), 1), "homothetic-triple", {}),
    (diagonal(GF(2), 2), "rb-system", {}),
    (truncated_polynomial(GF(2), 2), "bimult", {}),
    (small_algebras(GF(2))["left-unit"], "self-permutable-bimult", {}),
    (small_algebras(GF(3))["right-unit"], "weighted-rb", {"lam": 2}),
    (small_algebras(GF(3))["K[x]/(x^2)"], "generalized-rb", {"alpha": 0, "beta": 2}),
]


@pytest.mark.parametrize("A,target,params", SMALL_SPACES, ids=[f"{a.label}-{t}" for a, t, _ in SMALL_SPACES])
def test_inline_check_agrees_with_public_predicates(A, target, params):
    spec = SearchSpec(A, Target(target), **params)
    mats, mask = every_candidate(spec)
    for z in range(len(mats)):
        assert bool(mask[z]) == public_check(spec, _package(spec, mats[z]))


def test_homothetic_hits_match_oracle():
    for p in (2, 3):
        ar = oracle.Arith(p)
        for A in small_algebras(GF(p)).values():
            if A.dim != 1:
                continue
            c = oracle.raw_table(A)
            got = [scalars(h[:2]) + (int(h[2].left.matrix[0, 0]), int(h[2].right.matrix[0, 0]))
                   for h in search(A, "homothetic-triple").hits]
            want = [t for t in itertools.product(range(p), repeat=4)
                    if oracle.homothetic_ok(ar, c, *([[x]] for x in t))]
            assert got == want


def test_scan_order_is_row_major():
    mats = _decode(0, 16, 2, 1, 2)
    assert mats[1].tolist() == [[[0, 0], [0, 1]]]
    assert mats[2].tolist() == [[[0, 0], [1, 0]]]
    assert mats[8].tolist() == [[[1, 0], [0, 0]]]


# -- determinism and reports ----------------------------------------------


def test_repeated_searches_are_byte_identical():
    A = small_algebras(GF(3))["left-unit"]
    a = dumps(search(A, "rb-system").to_json())
    b = dumps(search(A, "rb-system").to_json())
    assert a == b
    data = json.loads(a)
    assert data["total_scanned"] == 3**8
    assert data["spec"]["target"] == "rb-system"
    assert all(len(hit) == 2 and "matrix" in hit[0] for hit in data["hits"])


def test_chunking_does_not_change_results():
    A = diagonal(GF(2), 2)
    spec = SearchSpec(A, Target.RB_SYSTEM)
    assert enumerate_space(spec, chunk=7).hits == enumerate_space(spec).hits


def test_cross_validate_weight_one():
    for A in small_algebras(GF(2)).values():
        if A.dim == 2:
            report = cross_validate(search(A, "weighted-rb", lam=1))
            assert report["failures"] == []
            assert report["hits_checked"] > 0


def test_cross_validate_weights_3_2_over_f2():
    # (3, 2) = (1, 0) mod 2: t^2 - t = 0 has roots 0 and 1
    for A in small_algebras(GF(2)).values():
        result = search(A, "generalized-rb", alpha=3, beta=2)
        report = cross_validate(result, levels=(1, 2))
        assert report["failures"] == []
        assert report["constructions_run"] >= len(result.hits) * 2


def test_cross_validate_other_targets():
    for A in small_algebras(GF(3)).values():
        if A.dim == 1:
            for target in ("rb-system", "homothetic-triple"):
                assert cross_validate(search(A, target))["failures"] == []


def test_empty_census():
    # e^2 = e over F_3 has no generalized operator of weights (0, 1): r^2 + 1 = 0 is unsolvable
    result = search(one_dim(GF(3)), "generalized-rb", alpha=0, beta=1)
    assert result.hits == []
    assert cross_validate(result) == {"target": "generalized-rb", "hits_checked": 0, "constructions_run": 0, "failures": []}
