import itertools
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from rotadyck import (
    GF,
    Algebra,
    DimensionMismatch,
    GeneralizedRBOperator,
    InvalidInput,
    LinOp,
    Q,
    RBSystem,
    WeightedRBOperator,
    build_nijenhuis_matrix,
    build_triple_algebra,
    check_associative,
    check_generalized_rb,
    check_nijenhuis,
    check_rb_system,
    check_rb_weight,
    from_generalized,
    from_weighted,
    identity_op,
    nijenhuis_embedding,
    weight_splittings,
    zero_op,
)
from rotadyck.catalog import (
    diagonal,
    integration_operator,
    one_dim,
    small_algebras,
    truncated_polynomial,
    upper_triangular,
    zero_algebra,
)
from rotadyck.rota_baxter import discriminant

import oracle


def all_ops(A):
    F, n = A.field, A.dim
    for entries in itertools.product(range(F.p), repeat=n * n):
        yield LinOp(A, [list(entries[i * n:(i + 1) * n]) for i in range(n)])


# -- weighted ------------------------------------------------------------


def test_zero_operator_has_every_weight():
    A = upper_triangular(Q)
    for lam in (0, 1, Fraction(-7, 3)):
        assert check_rb_weight(A, zero_op(A), lam).passed


def test_integration_is_weight_zero():
    A = truncated_polynomial(Q, 4)
    J = integration_operator(A)
    assert J(A.basis(2)) == A.basis(3) * Fraction(1, 3)
    assert J(A.basis(3)) == A.zero()
    assert check_rb_weight(A, J, 0).passed
    assert oracle.rb_weight_ok(oracle.Arith(), oracle.raw_table(A), oracle.raw_matrix(J), 0)
    report = check_rb_weight(A, J, 1)
    assert not report.passed
    assert not oracle.rb_weight_ok(oracle.Arith(), oracle.raw_table(A), oracle.raw_matrix(J), 1)


def test_identity_has_weight_minus_one():
    A = upper_triangular(Q)
    assert check_rb_weight(A, identity_op(A), -1).passed
    assert not check_rb_weight(A, identity_op(A), 1).passed


def test_witnesses_are_basis_pairs():
    A = truncated_polynomial(Q, 2)
    report = check_rb_weight(A, identity_op(A), 0)
    assert report.witnesses == [("rota-baxter", (0, 0)), ("rota-baxter", (0, 1)), ("rota-baxter", (1, 0))]
    assert report.to_json()["violations"][0] == {"identity": "rota-baxter", "indices": [0, 0], "lhs": ["1", "0"], "rhs": ["2", "0"]}


def test_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        check_rb_weight(upper_triangular(Q), identity_op(diagonal(Q, 2)), 0)


# -- generalized ---------------------------------------------------------


def test_minus_identity_has_weights_3_2():
    for A in (upper_triangular(Q), truncated_polynomial(Q, 3), diagonal(GF(5), 2)):
        assert check_generalized_rb(A, -identity_op(A), 3, 2).passed


def test_beta_zero_is_weighted_case():
    A = truncated_polynomial(Q, 4)
    J = integration_operator(A)
    assert check_generalized_rb(A, J, 0, 0).passed
    A = upper_triangular(Q)
    assert check_generalized_rb(A, identity_op(A), -1, 0).passed


def test_zero_operator_with_beta_fails():
    A = upper_triangular(Q)
    assert not check_generalized_rb(A, zero_op(A), 5, 1).passed


@pytest.mark.parametrize("p", [2, 3])
def test_predicates_agree_with_oracle_exhaustively(p):
    F = GF(p)
    ar = oracle.Arith(p)
    for A in small_algebras(F).values():
        c = oracle.raw_table(A)
        for R in all_ops(A):
            M = oracle.raw_matrix(R)
            for lam in range(p):
                assert check_rb_weight(A, R, lam).passed == oracle.rb_weight_ok(ar, c, M, lam)
            for alpha, beta in [(1, 1), (0, 1), (p - 1, 0)]:
                assert check_generalized_rb(A, R, alpha, beta).passed == oracle.generalized_ok(ar, c, M, alpha, beta)


# -- systems -------------------------------------------------------------


def test_system_examples():
    A = upper_triangular(Q)
    Z, I = zero_op(A), identity_op(A)
    assert check_rb_system(A, Z, Z).passed
    assert check_rb_system(A, Z, I).passed
    assert check_rb_system(A, I, Z).passed  # ab = id(ab + 0) and 0 = 0
    assert check_rb_system(A, I, I).failed_identities() == {"R", "S"}
    # R = 0 leaves only the S equation; S(E11) = E22 gives E22 E22 != S(E11 E22) = 0
    P = LinOp.from_images(A, [A.basis(2), A.zero(), A.zero()])
    report = check_rb_system(A, Z, P)
    assert report.witnesses == [("S", (0, 0))]


def test_weighted_gives_system():
    A = truncated_polynomial(Q, 4)
    J = integration_operator(A)
    system = from_weighted(WeightedRBOperator(J, 0))
    assert system.R == J and system.S == J
    A = upper_triangular(Q)
    system = from_weighted(WeightedRBOperator(zero_op(A), 1))
    assert system.S == identity_op(A)
    system = from_weighted(WeightedRBOperator(identity_op(A), -1))
    assert system.S.is_zero()


def test_invalid_bundles_are_rejected():
    A = upper_triangular(Q)
    with pytest.raises(InvalidInput):
        WeightedRBOperator(identity_op(A), 0)
    with pytest.raises(InvalidInput):
        GeneralizedRBOperator(zero_op(A), 0, 1)
    with pytest.raises(InvalidInput):
        RBSystem(identity_op(A), identity_op(A))
    with pytest.raises(InvalidInput):
        from_weighted("R")


@pytest.mark.parametrize("p", [2, 3, 5])
def test_weighted_census_embeds(p):
    F = GF(p)
    for A in small_algebras(F).values():
        if A.dim > 1 and p > 3:
            continue
        for R in all_ops(A):
            for lam in range(p):
                if check_rb_weight(A, R, lam).passed:
                    s = from_weighted(WeightedRBOperator(R, lam))
                    assert check_rb_system(A, s.R, s.S).passed


# -- splitting the weights -----------------------------------------------


def test_splitting_3_2():
    splits = from_generalized(GeneralizedRBOperator(-identity_op(upper_triangular(Q)), 3, 2))
    assert [(s.lam, s.mu) for s in splits] == [(1, 2), (2, 1)]
    for s in splits:
        assert check_rb_system(s.system.A, s.system.R, s.system.S).passed


def test_splitting_alpha_zero():
    A = truncated_polynomial(Q, 4)
    J = integration_operator(A)
    # weights (alpha, 0): roots {0, alpha}
    A2 = upper_triangular(Q)
    splits = from_generalized(GeneralizedRBOperator(identity_op(A2), -1, 0))
    assert [(s.lam, s.mu) for s in splits] == [(-1, 0), (0, -1)]
    assert splits[1].system.R == identity_op(A2)
    double = from_generalized(GeneralizedRBOperator(J, 0, 0))
    assert [(s.lam, s.mu) for s in double] == [(0, 0)]


def test_no_rational_roots():
    A = zero_algebra(Q, 1)
    g = GeneralizedRBOperator(zero_op(A), 0, 1)
    assert from_generalized(g) == []
    assert discriminant(Q(0), Q(1)) == -4


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_splittings_match_root_search(p):
    F = GF(p)
    for a, b in itertools.product(range(p), repeat=2):
        roots = sorted(t for t in range(p) if (t * t - a * t + b) % p == 0)
        got = weight_splittings(F(a), F(b))
        if not roots:
            assert got == []
        elif len(roots) == 1:
            assert got == [(F(roots[0]), F(roots[0]))]
        else:
            lo, hi = roots
            assert got == [(F(lo), F(hi)), (F(hi), F(lo))]
        for lam, mu in got:
            assert lam + mu == a and lam * mu == b


@given(st.integers(-20, 20), st.integers(-20, 20))
def test_rational_splittings_satisfy_vieta(a, b):
    for lam, mu in weight_splittings(Q(a), Q(b)):
        assert lam + mu == a and lam * mu == b
    assert bool(weight_splittings(Q(a), Q(b))) == (Q(a * a - 4 * b).sqrt() is not None)


# -- Nijenhuis embedding -------------------------------------------------


def test_triple_algebra_examples():
    K = one_dim(Q)
    B = build_triple_algebra(K)
    assert B.dim == 3
    assert B.element([1, 0, 0]) * B.element([0, 0, 1]) == B.element([0, 0, 1])
    A = upper_triangular(Q)
    B = build_triple_algebra(A)
    a = B.element([1, 2, 3, 0, 0, 0, 0, 0, 0])
    b = B.element([0, 0, 0, 4, 5, 6, 0, 0, 0])
    assert a * b == B.zero()
    assert build_triple_algebra(zero_algebra(Q, 2)).table.any() == False  # noqa: E712


@pytest.mark.parametrize("p", [2, 3])
def test_triple_algebra_matches_oracle_and_is_associative(p):
    ar = oracle.Arith(p)
    for A in small_algebras(GF(p)).values():
        B = build_triple_algebra(A)
        assert oracle.raw_table(B) == oracle.triple_table(ar, oracle.raw_table(A))
        assert check_associative(B).passed


def test_literal_triple_product_is_not_associative():
    # the variant with a'b' in the middle slot fails associativity already on K
    ar = oracle.Arith()
    literal = oracle.triple_table(ar, oracle.raw_table(one_dim(Q)), literal=True)
    assert oracle.assoc_violations(ar, literal)
    assert not check_associative(Algebra(Q, literal, verify=False)).passed


def test_nijenhuis_matrix_shape():
    A = upper_triangular(Q)
    I, Z = identity_op(A), zero_op(A)
    N = build_nijenhuis_matrix(A, I, I)
    B = N.algebra
    v = B.element([1, 2, 3, 4, 5, 6, 7, 8, 9])
    assert N(v) == B.element([7, 8, 9, 7, 8, 9, 0, 0, 0])
    assert N(B.element([1, 2, 3, 4, 5, 6, 0, 0, 0])) == B.zero()
    assert (N @ N).is_zero()
    assert check_nijenhuis(B, build_nijenhuis_matrix(A, Z, Z)).passed
    assert check_nijenhuis(B, identity_op(B)).passed


def test_nijenhuis_from_valid_system():
    A = truncated_polynomial(Q, 4)
    J = integration_operator(A)
    emb = nijenhuis_embedding(from_weighted(WeightedRBOperator(J, 0)))
    assert emb.B.dim == 12
    assert check_nijenhuis(emb.B, emb.N).passed


@pytest.mark.parametrize("p", [2, 3])
def test_nijenhuis_equivalence_dim_one(p):
    ar = oracle.Arith(p)
    for A in small_algebras(GF(p)).values():
        if A.dim != 1:
            continue
        B = build_triple_algebra(A)
        for R, S in itertools.product(list(all_ops(A)), repeat=2):
            N = build_nijenhuis_matrix(A, R, S)
            verdict = check_rb_system(A, R, S).passed
            assert verdict == check_nijenhuis(B, N).passed
            assert verdict == oracle.rb_system_ok(ar, oracle.raw_table(A), oracle.raw_matrix(R), oracle.raw_matrix(S))
            assert verdict == oracle.nijenhuis_ok(ar, oracle.raw_table(B), oracle.raw_matrix(N))
