"""Regenerate the JSON workspaces shipped in ``src/rotadyck/corpus``.

Every object is verified before it is written.  Run from the repository root::

    python3 tools/make_corpus.py
"""

from __future__ import annotations

from pathlib import Path

from rotadyck import GF, Q, check_dyck_axioms, identity_op, zero_op
from rotadyck.catalog import integration_operator, small_algebras, truncated_polynomial, upper_triangular
from rotadyck.dyck import DyckAlgebra, build_dyck
from rotadyck.homothetism import HomotheticRBSystem, scalar_homothetism, zero_homothetism
from rotadyck.rota_baxter import GeneralizedRBOperator, RBSystem, WeightedRBOperator, from_generalized
from rotadyck.serialize import Workspace

CORPUS = Path(__file__).resolve().parent.parent / "src" / "rotadyck" / "corpus"


def integration() -> Workspace:
    A = truncated_polynomial(Q, 4)
    J = integration_operator(A)
    WeightedRBOperator(J, Q(0))
    HomotheticRBSystem(RBSystem(J, J), zero_homothetism(A))
    ws = Workspace()
    ws.add_algebra("poly4", A)
    ws.add_operator("J", J, "poly4")
    ws.add_operator("zero", zero_homothetism(A), "poly4")
    ws.add_scalar("zero_weight", Q(0))
    ws.add_target("integration", algebra="poly4", R="J", **{"lambda": "zero_weight"})
    ws.add_target("integration-homothetic", algebra="poly4", R="J", S="J", sigma="zero")
    return ws


def weights_3_2() -> Workspace:
    A = upper_triangular(Q)
    Rbar = -identity_op(A)
    g = GeneralizedRBOperator(Rbar, Q(3), Q(2))
    assert [(s.lam, s.mu) for s in from_generalized(g)] == [(1, 2), (2, 1)]
    ws = Workspace()
    ws.add_algebra("T2", A)
    ws.add_operator("minus_id", Rbar, "T2")
    ws.add_scalar("alpha", Q(3))
    ws.add_scalar("beta", Q(2))
    ws.add_target("weights", algebra="T2", Rbar="minus_id", alpha="alpha", beta="beta")
    return ws


def homothety_one() -> Workspace:
    A = upper_triangular(Q)
    h = HomotheticRBSystem(RBSystem(zero_op(A), identity_op(A)), scalar_homothetism(A, 1))
    ws = Workspace()
    ws.add_algebra("T2", A)
    ws.add_operator("R", h.R, "T2")
    ws.add_operator("S", h.S, "T2")
    ws.add_operator("sigma", h.sigma, "T2")
    ws.add_target("system", algebra="T2", R="R", S="S")
    ws.add_target("homothetic", algebra="T2", R="R", S="S", sigma="sigma")
    return ws


def bad_dyck() -> Workspace:
    """A Dyck^2 algebra with one corrupted entry of ``*_0``, failing the ``first`` axiom."""
    A = upper_triangular(Q)
    h = HomotheticRBSystem(RBSystem(zero_op(A), identity_op(A)), scalar_homothetism(A, 1))
    good = build_dyck(h, 2)
    assert check_dyck_axioms(good).passed
    n = A.dim
    for index in [(i, j, k) for i in range(n) for j in range(n) for k in range(n)]:
        bad = good.replace_entry(0, index, 1)
        if "first" in check_dyck_axioms(bad).failed_identities():
            break
    ws = Workspace()
    ws.dyck["good"] = good
    ws.dyck["corrupted"] = DyckAlgebra(bad.field, bad.products, "corrupted dyck2(T2)")
    return ws


def small(p: int) -> Workspace:
    ws = Workspace()
    for name, A in small_algebras(GF(p)).items():
        ws.add_algebra(name, A)
    return ws


def main() -> None:
    CORPUS.mkdir(parents=True, exist_ok=True)
    files = {
        "integration.json": integration(),
        "weights_3_2.json": weights_3_2(),
        "homothety_one.json": homothety_one(),
        "bad_dyck.json": bad_dyck(),
        "small_f2.json": small(2),
        "small_f3.json": small(3),
        "small_f5.json": small(5),
    }
    for name, ws in files.items():
        ws.save(CORPUS / name)
        print("wrote", CORPUS / name)


if __name__ == "__main__":
    main()
