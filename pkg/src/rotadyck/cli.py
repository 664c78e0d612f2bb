"""Command-line front end: ``rotadyck verify | construct | search``.

Exit codes: 0 pass, 1 predicate failure, 2 malformed input, 3 the weights
have no splitting over the field, 4 the search space exceeds the guard.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Any

from .dyck import build_dyck, check_dyck_axioms
from .errors import AlgebraError, NotAssociative, NoRootsInField, SpaceTooLarge
from .homothetism import (
    DoubleOperator,
    HomotheticRBSystem,
    check_bimultiplication,
    check_homothetic,
    check_self_permutable,
    gamma_from_weights,
    scalar_homothetism,
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
    discriminant,
    from_generalized,
    from_weighted,
    nijenhuis_embedding,
)
from .search import SearchSpec, Target, cross_validate, default_guard, enumerate_space
from .serialize import Workspace, WorkspaceError, dumps

EXIT_PASS, EXIT_FAIL, EXIT_MALFORMED, EXIT_NO_ROOTS, EXIT_GUARD = 0, 1, 2, 3, 4

PREDICATES = ("rb-weight", "generalized-rb", "rb-system", "nijenhuis", "bimult", "self-permutable", "homothetic", "dyck")
CONSTRUCTIONS = ("system-from-weighted", "system-from-generalized", "nijenhuis-embedding", "gamma-homothetic", "dyck")


class Outcome(Exception):
    """Carries an exit code and a JSON report out of a command."""

    def __init__(self, code: int, report: dict):
        self.code = code
        self.report = report
        super().__init__(report.get("error", ""))


def _roles(ws: Workspace, target: str, *needed: str) -> dict[str, Any]:
    objs = ws.resolve(target)
    missing = [r for r in needed if r not in objs]
    if missing:
        raise WorkspaceError(f"target {target!r} lacks role(s) {', '.join(missing)}")
    return objs


# -- verify ------------------------------------------------------------------


def _verify(ws: Workspace, target: str, predicate: str) -> dict:
    if predicate == "dyck":
        if target not in ws.dyck:
            raise WorkspaceError(f"unknown Dyck algebra {target!r}")
        return check_dyck_axioms(ws.dyck[target]).to_json()
    if predicate == "rb-weight":
        o = _roles(ws, target, "R", "lambda")
        return check_rb_weight(o["algebra"], o["R"], o["lambda"]).to_json()
    if predicate == "generalized-rb":
        o = _roles(ws, target, "Rbar", "alpha", "beta")
        return check_generalized_rb(o["algebra"], o["Rbar"], o["alpha"], o["beta"]).to_json()
    if predicate == "rb-system":
        o = _roles(ws, target, "R", "S")
        return check_rb_system(o["algebra"], o["R"], o["S"]).to_json()
    if predicate == "nijenhuis":
        o = _roles(ws, target, "N")
        return check_nijenhuis(o["algebra"], o["N"]).to_json()
    if predicate in ("bimult", "self-permutable"):
        sigma = _roles(ws, target, "sigma")["sigma"]
        check = check_bimultiplication if predicate == "bimult" else check_self_permutable
        return check(sigma).to_json()
    if predicate == "homothetic":
        o = _roles(ws, target, "R", "S", "sigma")
        checks = check_homothetic(OperatorPair(o["R"], o["S"]), o["sigma"])
        return {
            "passed": all(r.passed for r in checks.values()),
            "failed": [name for name, r in checks.items() if not r.passed],
            "checks": {name: r.to_json() for name, r in checks.items()},
        }
    raise WorkspaceError(f"unknown predicate {predicate!r}")


def cmd_verify(args) -> int:
    ws = Workspace.load(args.file)
    report = {"command": "verify", "predicate": args.predicate, "target": args.target}
    report.update(_verify(ws, args.target, args.predicate))
    _emit(args, report, _verify_text(report))
    if args.out:
        Path(args.out).write_text(dumps(report), encoding="utf-8")
    return EXIT_PASS if report["passed"] else EXIT_FAIL


def _verify_text(report: dict) -> str:
    verdict = "PASS" if report["passed"] else "FAIL"
    lines = [f"{verdict} {report['predicate']} on {report['target']}"]
    violations = report.get("violations", [])
    for name, sub in report.get("checks", {}).items():
        violations += [dict(v, identity=f"{name}:{v['identity']}") for v in sub["violations"]]
    for v in violations[:20]:
        lines.append(f"  {v['identity']} at {tuple(v['indices'])}: lhs={v['lhs']} rhs={v['rhs']}")
    if len(violations) > 20:
        lines.append(f"  ... {len(violations) - 20} more")
    return "\n".join(lines)


# -- construct ---------------------------------------------------------------


def _base(ws: Workspace, A) -> tuple[Workspace, str]:
    out = Workspace()
    name = next((k for k, B in ws.algebras.items() if B == A), "A")
    out.add_algebra(name, A)
    return out, name


def _require_roots(alpha, beta, splits) -> None:
    if not splits:
        raise NoRootsInField(discriminant(alpha, beta))


def _must_pass(what: str, report) -> None:
    if not report.passed:
        raise Outcome(EXIT_FAIL, {"error": "VerificationFailed", "construction": what, "report": report.to_json()})


def _add_system(out: Workspace, alg: str, prefix: str, system, sigma: DoubleOperator | None = None) -> str:
    out.add_operator(f"{prefix}.R", system.R, alg)
    out.add_operator(f"{prefix}.S", system.S, alg)
    roles = {"algebra": alg, "R": f"{prefix}.R", "S": f"{prefix}.S"}
    if sigma is not None:
        out.add_operator(f"{prefix}.sigma", sigma, alg)
        roles["sigma"] = f"{prefix}.sigma"
    return out.add_target(prefix, **roles)


def _homothetic_from_source(ws: Workspace, source: str, choice: int) -> tuple[HomotheticRBSystem, dict]:
    o = ws.resolve(source)
    A = o["algebra"]
    if {"R", "S", "sigma"} <= o.keys():
        return HomotheticRBSystem(RBSystem(o["R"], o["S"]), o["sigma"]), {"from": "homothetic"}
    if {"R", "lambda"} <= o.keys():
        system = from_weighted(WeightedRBOperator(o["R"], o["lambda"]))
        info = {"from": "weighted", "lambda": o["lambda"].to_json()}
        return HomotheticRBSystem(system, scalar_homothetism(A, o["lambda"])), info
    if {"Rbar", "alpha", "beta"} <= o.keys():
        g = GeneralizedRBOperator(o["Rbar"], o["alpha"], o["beta"])
        splits = from_generalized(g)
        _require_roots(g.alpha, g.beta, splits)
        if not 0 <= choice < len(splits):
            raise WorkspaceError(f"--choice {choice} out of range 0..{len(splits) - 1}")
        s = splits[choice]
        info = {"from": "generalized", "lambda": s.lam.to_json(), "mu": s.mu.to_json(), "gamma": (s.mu - s.lam).to_json()}
        return gamma_from_weights(g, s), info
    if {"R", "S"} <= o.keys():
        raise WorkspaceError(f"target {source!r} has no sigma; add one to build a Dyck algebra")
    raise WorkspaceError(f"target {source!r} cannot be turned into a homothetic system")


def _construct(ws: Workspace, source: str, construction: str, m: int | None, choice: int) -> Workspace:
    if construction == "dyck":
        if m is None:
            raise WorkspaceError("construction dyck needs --m")
        h, info = _homothetic_from_source(ws, source, choice)
        D = build_dyck(h, m)
        _must_pass("dyck", check_dyck_axioms(D))
        out, alg = _base(ws, h.algebra)
        out.dyck[f"{source}.dyck{m}"] = D
        _add_system(out, alg, f"{source}.homothetic", h.system, h.sigma)
        out.report = {"construction": "dyck", "m": m, "dyck": f"{source}.dyck{m}", **info}
        return out

    o = ws.resolve(source)
    A = o["algebra"]
    out, alg = _base(ws, A)
    if construction == "system-from-weighted":
        o = _roles(ws, source, "R", "lambda")
        system = from_weighted(WeightedRBOperator(o["R"], o["lambda"]))
        _must_pass("system-from-weighted", check_rb_system(A, system.R, system.S))
        name = _add_system(out, alg, f"{source}.system", system)
        out.report = {"construction": construction, "targets": [name], "lambda": o["lambda"].to_json()}
    elif construction in ("system-from-generalized", "gamma-homothetic"):
        o = _roles(ws, source, "Rbar", "alpha", "beta")
        g = GeneralizedRBOperator(o["Rbar"], o["alpha"], o["beta"])
        disc = discriminant(g.alpha, g.beta)
        splits = from_generalized(g)
        _require_roots(g.alpha, g.beta, splits)
        entries = []
        for i, s in enumerate(splits):
            entry = {"lambda": s.lam.to_json(), "mu": s.mu.to_json(), "discriminant": disc.to_json()}
            if construction == "system-from-generalized":
                _must_pass(construction, check_rb_system(A, s.system.R, s.system.S))
                entry["target"] = _add_system(out, alg, f"{source}.system{i}", s.system)
            else:
                h = gamma_from_weights(g, s)
                for check in check_homothetic(h.system, h.sigma).values():
                    _must_pass(construction, check)
                entry["gamma"] = (s.mu - s.lam).to_json()
                entry["target"] = _add_system(out, alg, f"{source}.homothetic{i}", h.system, h.sigma)
            entries.append(entry)
        out.report = {"construction": construction, "systems": entries}
    elif construction == "nijenhuis-embedding":
        o = _roles(ws, source, "R", "S")
        emb = nijenhuis_embedding(RBSystem(o["R"], o["S"]))
        _must_pass(construction, check_nijenhuis(emb.B, emb.N))
        b_name = out.add_algebra(f"{source}.B", emb.B)
        out.add_operator(f"{source}.N", emb.N, b_name)
        out.add_target(f"{source}.nijenhuis", algebra=b_name, N=f"{source}.N")
        out.report = {"construction": construction, "targets": [f"{source}.nijenhuis"], "dim": emb.B.dim}
    else:
        raise WorkspaceError(f"unknown construction {construction!r}")
    return out


def cmd_construct(args) -> int:
    ws = Workspace.load(args.file)
    artifact = _construct(ws, args.source, args.construction, args.m, args.choice)
    text = json.dumps(artifact.report)
    if args.out:
        artifact.save(args.out)
        _emit(args, {"command": "construct", "written": str(args.out), **artifact.report}, f"wrote {args.out}: {text}")
    else:
        sys.stdout.write(artifact.dumps())
    return EXIT_PASS


# -- search ------------------------------------------------------------------


def cmd_search(args) -> int:
    ws = Workspace.load(args.file)
    if args.algebra not in ws.algebras:
        raise WorkspaceError(f"unknown algebra {args.algebra!r}")
    A = ws.algebras[args.algebra]
    F = A.field

    def weight(text):
        return None if text is None else F(F.decode(text))

    guard = args.guard if args.guard is not None else default_guard()
    spec = SearchSpec(A, Target(args.target), weight(args.lam), weight(args.alpha), weight(args.beta), guard)
    result = enumerate_space(spec)
    payload = result.to_json()
    code = EXIT_PASS
    if args.cross_validate:
        payload["cross_validation"] = cross_validate(result)
        if payload["cross_validation"]["failures"]:
            code = EXIT_FAIL
    text = f"{spec.target.value} on {args.algebra}: {len(result.hits)} hits / {result.total_scanned} scanned"
    if args.cross_validate:
        cv = payload["cross_validation"]
        text += f"; cross-validation: {cv['constructions_run']} checks, {len(cv['failures'])} failures"
    if args.out:
        Path(args.out).write_text(dumps(payload), encoding="utf-8")
        _emit(args, {"command": "search", "written": str(args.out), "hits": len(result.hits),
                     "total_scanned": result.total_scanned}, text)
    elif args.format == "text":
        print(text)
    else:
        sys.stdout.write(dumps(payload))
    return code


# -- plumbing ----------------------------------------------------------------


def _emit(args, report: dict, text: str) -> None:
    if args.format == "text":
        print(text)
    else:
        sys.stdout.write(dumps(report))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="rotadyck", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--file", required=True, help="workspace JSON file")
        p.add_argument("--out", help="write the JSON artifact/report here")
        p.add_argument("--format", choices=("json", "text"), default="json")

    p = sub.add_parser("verify", help="run a predicate on a named target")
    common(p)
    p.add_argument("--target", required=True)
    p.add_argument("--predicate", required=True, choices=PREDICATES)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("construct", help="build and verify a derived object")
    common(p)
    p.add_argument("--source", required=True)
    p.add_argument("--construction", required=True, choices=CONSTRUCTIONS)
    p.add_argument("--m", type=int, help="level for the dyck construction")
    p.add_argument("--choice", type=int, default=0, help="root ordering for generalized sources")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("search", help="exhaustive operator search over F_p")
    common(p)
    p.add_argument("--algebra", required=True)
    p.add_argument("--target", required=True, choices=[t.value for t in Target])
    p.add_argument("--lambda", dest="lam")
    p.add_argument("--alpha")
    p.add_argument("--beta")
    p.add_argument("--guard", type=int, help="maximum candidate count (default: $RD_GUARD or 10^7)")
    p.add_argument("--cross-validate", action="store_true")
    p.set_defaults(func=cmd_search)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except Outcome as exc:
        report = exc.report
        code = exc.code
    except NotAssociative as exc:
        report = {"error": "NotAssociative", "message": str(exc), "violations": [list(v) for v in exc.violations]}
        code = EXIT_MALFORMED
    except NoRootsInField as exc:
        report = {"error": "NoRootsInField", "discriminant": exc.discriminant.to_json(), "message": str(exc)}
        code = EXIT_NO_ROOTS
    except SpaceTooLarge as exc:
        report = {"error": "SpaceTooLarge", "count": exc.count, "guard": exc.guard}
        code = EXIT_GUARD
    except (AlgebraError, OSError) as exc:
        report = {"error": type(exc).__name__, "message": str(exc)}
        code = EXIT_MALFORMED
    if args.format == "text":
        print(f"error: {report.get('error')}: {report.get('message', '')}", file=sys.stderr)
    else:
        sys.stdout.write(dumps(report))
    return code


if __name__ == "__main__":
    sys.exit(main())
