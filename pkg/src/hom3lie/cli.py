"""Command-line surface.

Subcommands: verify, derivations, extend, series, metric, reconstruct,
fixtures.  Exit codes: 0 when every selected check passed, 1 when a
check failed or a precondition was violated (the verdict names the
reason), 2 on malformed input.  Output is a deterministic verdict,
rendered as text by default or as canonical JSON with ``--json``.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Optional

from . import fixtures as fixture_mod
from .algebras import (
    AlgebraReport,
    Hom3LieAlgebra,
    direct_sum,
    verify_hom_jacobi,
    verify_multiplicative,
    verify_regular,
)
from .derivations import derivation_extension, derivation_space, inner_space
from .errors import PreconditionError
from .extensions import t_star_extension, t_theta_extension, verify_metric
from .io import (
    FileFormatError,
    algebra_to_dict,
    canonical_dumps,
    cocycle_to_dict,
    load_algebra,
    load_cocycle,
    load_form,
    load_matrix,
    load_representation,
    load_subspace,
    mat_to_lists,
    matrix_to_dict,
    subspace_to_dict,
    vec_to_dense,
    write_json,
)
from .representations import adjoint_rep, coadjoint_rep, semidirect_product
from .structure import reconstruct_t_star, series

DEFAULT_CHECKS = ("skew", "jacobi", "multiplicative")
ALL_CHECKS = ("skew", "jacobi", "multiplicative", "regular")


@dataclass
class Verdict:
    """Deterministic record of one command run."""

    command: str
    inputs: list[str]
    flags: dict[str, bool] = field(default_factory=dict)
    witnesses: list[dict] = field(default_factory=list)
    witnesses_total: int = 0
    derived_data: Optional[dict] = None
    error: Optional[str] = None

    def payload(self) -> dict:
        out: dict[str, Any] = {
            "command": self.command,
            "inputs": self.inputs,
            "flags": self.flags,
            "witnesses": self.witnesses,
            "witnesses_total": self.witnesses_total,
        }
        if self.derived_data is not None:
            out["derived_data"] = self.derived_data
        if self.error is not None:
            out["error"] = self.error
        return out

    @property
    def exit_code(self) -> int:
        if self.error is not None:
            return 1
        return 0 if all(self.flags.values()) else 1

    def render_text(self) -> str:
        lines = [f"command: {self.command}"]
        for name in self.inputs:
            lines.append(f"input: {name}")
        for name in sorted(self.flags):
            lines.append(f"check {name}: {'pass' if self.flags[name] else 'FAIL'}")
        if self.witnesses_total:
            lines.append(f"violations: {self.witnesses_total} (showing {len(self.witnesses)})")
            for w in self.witnesses:
                lines.append(f"  {w}")
        if self.error is not None:
            lines.append(f"error: {self.error}")
        return "\n".join(lines)


def _violations_payload(report: AlgebraReport) -> list[dict]:
    out = []
    for v in report.violations:
        out.append(
            {
                "identity": v.identity,
                "indices": [i + 1 for i in v.indices],
                "left": vec_to_dense(v.left),
                "right": vec_to_dense(v.right),
            }
        )
    return out


def _emit(verdict: Verdict, as_json: bool) -> int:
    if as_json:
        sys.stdout.write(canonical_dumps(verdict.payload()))
    else:
        print(verdict.render_text())
    return verdict.exit_code


def cmd_verify(args: argparse.Namespace) -> int:
    alg = load_algebra(args.file)
    checks = tuple(args.checks.split(",")) if args.checks else DEFAULT_CHECKS
    for c in checks:
        if c not in ALL_CHECKS:
            raise FileFormatError(f"unknown check {c!r}; choose from {', '.join(ALL_CHECKS)}")
    verdict = Verdict("verify", [args.file])
    report = AlgebraReport()
    if "skew" in checks:
        # increasing-triple storage makes skewness structural
        verdict.flags["skew"] = True
    if "jacobi" in checks:
        report = report.merged(verify_hom_jacobi(alg))
        verdict.flags["jacobi"] = bool(report.hom_jacobi_ok)
    if "multiplicative" in checks or "regular" in checks:
        rep = verify_regular(alg) if "regular" in checks else verify_multiplicative(alg)
        report = report.merged(rep)
        if "multiplicative" in checks:
            verdict.flags["multiplicative"] = bool(rep.multiplicative_ok)
        if "regular" in checks:
            verdict.flags["regular"] = bool(rep.regular_ok)
    verdict.witnesses = _violations_payload(report)
    verdict.witnesses_total = report.violations_total
    return _emit(verdict, args.json)


def cmd_derivations(args: argparse.Namespace) -> int:
    alg = load_algebra(args.file)
    verdict = Verdict("derivations", [args.file])
    if abs(args.k) > args.max_k:
        verdict.error = f"grade {args.k} outside configured range |k| <= {args.max_k}"
        return _emit(verdict, args.json)
    try:
        space = derivation_space(alg, args.k)
        data: dict[str, Any] = {
            "k": args.k,
            "dimension": space.dimension,
            "basis": [mat_to_lists(m) for m in space.basis],
        }
        if args.inner:
            inner = inner_space(alg, args.k)
            data["inner_dimension"] = inner.dimension
            data["inner_basis"] = [mat_to_lists(m) for m in inner.basis]
        verdict.derived_data = data
    except (PreconditionError, ValueError) as exc:
        verdict.error = f"{type(exc).__name__}: {exc}"
        return _emit(verdict, args.json)
    if args.output:
        write_json(args.output, verdict.derived_data)
    return _emit(verdict, args.json)


def _report_flags(report: AlgebraReport) -> dict[str, bool]:
    flags = {}
    if report.skew_ok is not None:
        flags["skew"] = report.skew_ok
    if report.hom_jacobi_ok is not None:
        flags["jacobi"] = report.hom_jacobi_ok
    if report.multiplicative_ok is not None:
        flags["multiplicative"] = report.multiplicative_ok
    return flags


def _verify_both(alg: Hom3LieAlgebra) -> AlgebraReport:
    rep = verify_hom_jacobi(alg).merged(verify_multiplicative(alg))
    return AlgebraReport(
        skew_ok=True,
        hom_jacobi_ok=rep.hom_jacobi_ok,
        multiplicative_ok=rep.multiplicative_ok,
        violations=rep.violations,
        violations_total=rep.violations_total,
    )


def _resolve_rep(alg: Hom3LieAlgebra, source: str):
    if source == "adjoint":
        return adjoint_rep(alg)
    if source == "coadjoint":
        return coadjoint_rep(alg)
    _, rep = load_representation(source, algebra=alg)
    return rep


def cmd_extend(args: argparse.Namespace) -> int:
    kind = args.kind
    inputs = list(args.inputs)
    verdict = Verdict("extend", [kind] + inputs)

    def arity(n: int) -> None:
        if len(inputs) != n:
            raise FileFormatError(f"extend {kind} expects {n} inputs, got {len(inputs)}")

    try:
        if kind == "direct-sum":
            arity(2)
            result = direct_sum(load_algebra(inputs[0]), load_algebra(inputs[1]))
            report = _verify_both(result)
            data = {"algebra": algebra_to_dict(result)}
        elif kind == "derivation":
            arity(2)
            alg = load_algebra(inputs[0])
            dmat = load_matrix(inputs[1])
            ext, report = derivation_extension(alg, dmat)
            table = []
            for i in range(ext.dim):
                for j in range(ext.dim):
                    for k in range(ext.dim):
                        v = ext.value(i, j, k)
                        if not v.is_zero():
                            table.append({"args": [i + 1, j + 1, k + 1],
                                          "value": vec_to_dense(v)})
            data = {
                "dim": ext.dim,
                "alpha_prime": mat_to_lists(ext.twist),
                "table": table,
                "skew": bool(report.skew_ok),
            }
            # the literal extension rule is not skew, so only the
            # extension-theorem verdict and the twist check gate the exit
            report = AlgebraReport(
                hom_jacobi_ok=report.hom_jacobi_ok,
                multiplicative_ok=report.multiplicative_ok,
                violations=report.violations,
                violations_total=report.violations_total,
            )
        elif kind == "semidirect":
            arity(2)
            alg = load_algebra(inputs[0])
            rep = _resolve_rep(alg, inputs[1])
            result = semidirect_product(alg, rep)
            report = _verify_both(result)
            data = {"algebra": algebra_to_dict(result)}
        elif kind == "t-theta":
            arity(3)
            alg = load_algebra(inputs[0])
            rep = _resolve_rep(alg, inputs[1])
            _, th = load_cocycle(inputs[2], algebra=alg)
            result, report = t_theta_extension(alg, rep, th)
            data = {"algebra": algebra_to_dict(result)}
        elif kind == "t-star":
            arity(2)
            alg = load_algebra(inputs[0])
            _, th = load_cocycle(inputs[1], algebra=alg)
            result, form = t_star_extension(alg, th)
            report = _verify_both(result)
            data = {"algebra": algebra_to_dict(result), "q_gram": mat_to_lists(form.gram)}
        else:
            raise FileFormatError(f"unknown extension kind {kind!r}")
    except PreconditionError as exc:
        verdict.error = f"{type(exc).__name__}: {exc}"
        return _emit(verdict, args.json)

    verdict.flags = _report_flags(report)
    verdict.witnesses = _violations_payload(report)
    verdict.witnesses_total = report.violations_total
    verdict.derived_data = data
    if args.output:
        write_json(args.output, data.get("algebra", data))
    return _emit(verdict, args.json)


def cmd_series(args: argparse.Namespace) -> int:
    alg = load_algebra(args.file)
    kind = {"derived": "derived", "descending": "central_descending",
            "ascending": "central_ascending"}[args.kind]
    result = series(alg, kind, max_steps=args.max_steps)
    verdict = Verdict("series", [args.file])
    verdict.flags["stabilized"] = result.stabilized
    verdict.derived_data = {
        "kind": result.kind,
        "dims": [t.dim for t in result.terms],
        "length": result.length,
        "terms": [subspace_to_dict(t) for t in result.terms],
    }
    return _emit(verdict, args.json)


def cmd_metric(args: argparse.Namespace) -> int:
    alg = load_algebra(args.file)
    form = load_form(args.form)
    report = verify_metric(alg, form)
    verdict = Verdict("metric", [args.file, args.form])
    verdict.flags = {
        "symmetric": report.symmetric_ok,
        "nondegenerate": report.nondegenerate_ok,
        "invariant": report.invariant_ok,
    }
    verdict.witnesses = [{"identity": "invariant", "indices": [i + 1 for i in w]}
                         for w in report.witnesses]
    verdict.witnesses_total = report.violations_total
    verdict.derived_data = {"twist_invariant": report.twist_invariant_ok}
    return _emit(verdict, args.json)


def cmd_reconstruct(args: argparse.Namespace) -> int:
    alg = load_algebra(args.file)
    form = load_form(args.form)
    ideal = load_subspace(args.ideal)
    comp = load_subspace(args.complement) if args.complement else None
    verdict = Verdict(
        "reconstruct",
        [args.file, args.form, args.ideal] + ([args.complement] if args.complement else []),
    )
    try:
        res = reconstruct_t_star(alg, form, ideal, comp)
    except PreconditionError as exc:
        verdict.error = f"{type(exc).__name__}: {exc}"
        return _emit(verdict, args.json)
    verdict.flags["isometry"] = res.isometry_ok
    bundle = {
        "quotient": algebra_to_dict(res.quotient),
        "theta": cocycle_to_dict(res.theta, "quotient.json"),
        "tstar": algebra_to_dict(res.tstar),
        "sigma": matrix_to_dict(res.sigma),
        "isometry_ok": res.isometry_ok,
    }
    verdict.derived_data = bundle
    if args.output_dir:
        out = Path(args.output_dir)
        out.mkdir(parents=True, exist_ok=True)
        write_json(out / "quotient.json", bundle["quotient"])
        write_json(out / "theta.json", bundle["theta"])
        write_json(out / "tstar.json", bundle["tstar"])
        write_json(out / "sigma.json", bundle["sigma"])
        write_json(out / "verdict.json", verdict.payload())
    return _emit(verdict, args.json)


def cmd_fixtures(args: argparse.Namespace) -> int:
    out = Path(args.output_dir)
    out.mkdir(parents=True, exist_ok=True)
    names = []
    for name, alg in fixture_mod.catalog().items():
        path = out / f"{name}.json"
        write_json(path, algebra_to_dict(alg))
        names.append(str(path))
    verdict = Verdict("fixtures", [])
    verdict.derived_data = {"written": names}
    return _emit(verdict, args.json)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hom3lie",
        description="Exact verification and constructions for hom 3-Lie algebras.",
    )
    mode = parser.add_mutually_exclusive_group()
    mode.add_argument("--json", action="store_true", help="emit the verdict as canonical JSON")
    mode.add_argument("--text", action="store_false", dest="json",
                      help="emit a human-readable verdict (default)")
    parser.add_argument("--max-k", type=int, default=3, dest="max_k",
                        help="largest derivation grade served (default 3)")
    parser.add_argument("--max-steps", type=int, default=64, dest="max_steps",
                        help="safety bound for series computations (default 64)")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("verify", help="run identity checks on an algebra file")
    p.add_argument("file")
    p.add_argument("--checks", default=None,
                   help="comma-separated subset of skew,jacobi,multiplicative,regular")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("derivations", help="emit a basis of a derivation grade")
    p.add_argument("file")
    p.add_argument("--k", type=int, default=0)
    p.add_argument("--inner", action="store_true", help="also emit the inner derivations")
    p.add_argument("--output", default=None, help="write the basis bundle to this file")
    p.set_defaults(func=cmd_derivations)

    p = sub.add_parser("extend", help="build one of the extension constructions")
    p.add_argument("kind", choices=["direct-sum", "derivation", "semidirect", "t-theta", "t-star"])
    p.add_argument("inputs", nargs="+")
    p.add_argument("--output", default=None, help="write the constructed algebra to this file")
    p.set_defaults(func=cmd_extend)

    p = sub.add_parser("series", help="compute derived/central series")
    p.add_argument("file")
    p.add_argument("--kind", choices=["derived", "descending", "ascending"], default="derived")
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("metric", help="check a bilinear form for metric structure")
    p.add_argument("file")
    p.add_argument("form")
    p.set_defaults(func=cmd_metric)

    p = sub.add_parser("reconstruct", help="present a metric algebra as a dual-space extension")
    p.add_argument("file")
    p.add_argument("form")
    p.add_argument("ideal")
    p.add_argument("complement", nargs="?", default=None)
    p.add_argument("--output-dir", default=None, dest="output_dir")
    p.set_defaults(func=cmd_reconstruct)

    p = sub.add_parser("fixtures", help="write the bundled example algebras")
    p.add_argument("--output-dir", default="fixtures", dest="output_dir")
    p.set_defaults(func=cmd_fixtures)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except FileFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
