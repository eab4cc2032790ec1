"""Command-line driver: verification suites and worked-example payloads.

Exit codes: 0 all checks pass, 1 verification failure, 2 usage or parse
error.  Output is deterministic for a fixed seed and backend; timing data
appears only with --timing.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction

from .cy import (
    boundary_reports,
    classify_mirror_type,
    cy_axioms_sweep,
    global_witness_forms,
    induce_cy,
    structure_transfer_check,
)
from .dsl import ParseError, parse_form, parse_vector, print_form, print_vector
from .exterior import ExteriorError, Vector
from .floatcheck import verify_float
from .g2 import phi0, split_from_2plane, verify_g2_identities
from .ledger import IdentitySuite, SignLedger, VaryingSignError
from .octonion import find_signed_permutation
from .report import ENGINE_VERSION, SCHEMA_VERSION, Report
from .spin7 import (
    induce_g2,
    psi0,
    split_from_3frame,
    triality_checks,
    triality_table,
    verify_spin7,
)


def _common_flags(parser: argparse.ArgumentParser, root: bool) -> None:
    # Global flags are accepted both before and after the subcommand; the
    # subparser copies use SUPPRESS so they never clobber root-level values.
    d = (lambda v: v) if root else (lambda v: argparse.SUPPRESS)
    parser.add_argument("--format", choices=("json", "text"), default=d("text"))
    parser.add_argument(
        "--backend",
        choices=("rational", "float"),
        default=d("rational"),
        help="float is for timing comparisons and applies to 'verify' only",
    )
    parser.add_argument("--seed", type=int, default=d(7))
    parser.add_argument(
        "--timing",
        action="store_true",
        default=d(False),
        help="include timing data",
    )


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="g2spin7",
        description="Exact calibration geometry on the flat 7- and "
        "8-dimensional models.",
    )
    _common_flags(p, root=True)
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, help_):
        sp = sub.add_parser(name, help=help_)
        _common_flags(sp, root=False)
        return sp

    v = add("verify", "run a verification suite")
    v.add_argument("target", choices=("g2", "spin7"))
    v.add_argument("--samples", type=int, default=200)

    ind = add("induce", "emit induced structures")
    ind.add_argument("target", choices=("cy", "g2"))
    ind.add_argument("--xi", help="unit direction for the CY extraction (dim 7)")
    ind.add_argument("--gamma", help="unit direction for the G2 induction (dim 8)")

    m = add("mirror-report", "mirror pairing of two directions")
    m.add_argument("--xi", required=True)
    m.add_argument("--xi-prime", required=True)
    m.add_argument("--lambda", dest="plane", default="e1,e2",
                   help="oriented 2-plane 'u,v' (default e1,e2)")

    t = add("triality", "transfer identities of a 3-frame (dim 8)")
    t.add_argument("--alpha", required=True)
    t.add_argument("--beta", required=True)
    t.add_argument("--gamma", required=True)

    e = add("equiv", "signed-permutation equivalence of 3-forms")
    e.add_argument("--a", required=True)
    e.add_argument("--b", required=True)
    e.add_argument("--dim", type=int, choices=(7, 8), default=7)
    return p


def _emit(args, payload: dict, text_lines: list[str]) -> None:
    if args.format == "json":
        print(json.dumps(payload, indent=2, default=_json_default))
    else:
        print("\n".join(text_lines))


def _json_default(o):
    if isinstance(o, Fraction):
        return str(o)
    if isinstance(o, Vector):
        return print_vector(o)
    raise TypeError(f"not JSON serializable: {type(o)}")


def _report_payload(args, report: Report) -> dict:
    d = report.to_dict(timing=args.timing)
    return d


def cmd_verify(args) -> int:
    if args.samples < 1:
        raise UsageError("--samples must be >= 1")
    if args.backend == "float":
        t0 = time.perf_counter()
        checks = verify_float(samples=args.samples, seed=args.seed)
        report = Report(backend="float", seed=args.seed, checks=checks)
        payload = _report_payload(args, report)
        if args.timing:
            payload["elapsed_ms"] = round((time.perf_counter() - t0) * 1000, 3)
        _emit(args, payload, [report.to_text()])
        return 0 if report.passed else 1
    ledger = SignLedger()
    t0 = time.perf_counter()
    if args.target == "g2":
        from .cy import worked_example_checks

        g = phi0()
        checks = worked_example_checks(g)
        checks += verify_g2_identities(g, samples=args.samples, seed=args.seed,
                                       ledger=ledger)
        checks += cy_axioms_sweep(g, count=args.samples, seed=args.seed + 1,
                                  ledger=ledger)
    else:
        from .spin7 import worked_example_checks

        checks = worked_example_checks(psi0())
        checks += verify_spin7(samples=args.samples, seed=args.seed,
                               ledger=ledger)
    report = Report(
        backend="rational", seed=args.seed, checks=checks,
        ledger_signs=ledger.as_dict(), ledger_notes=ledger.notes(),
    )
    payload = _report_payload(args, report)
    if args.timing:
        payload["elapsed_ms"] = round((time.perf_counter() - t0) * 1000, 3)
    _emit(args, payload, [report.to_text()])
    return 0 if report.passed else 1


def cmd_induce(args) -> int:
    if args.backend == "float":
        raise UsageError("induce runs on the rational backend")
    if args.target == "cy":
        if not args.xi:
            raise UsageError("induce cy needs --xi")
        g = phi0()
        xi = parse_vector(args.xi, 7)
        c = induce_cy(g, xi)
        j_table = []
        for jcol in range(1, 8):
            img = c.j(Vector.basis(7, jcol))
            j_table.append(f"e{jcol} -> {print_vector(img)}")
        payload = {
            "schema": SCHEMA_VERSION,
            "engine": ENGINE_VERSION,
            "xi": print_vector(xi),
            "omega": print_form(c.omega),
            "j_table": j_table,
            "j_matrix": [[str(x) for x in row] for row in c.jmat],
            "re_omega": print_form(c.re_omega3),
            "im_omega": print_form(c.im_omega3),
        }
        lines = [
            f"xi        = {payload['xi']}",
            f"omega     = {payload['omega']}",
            "J         : " + "; ".join(j_table),
            f"re_omega  = {payload['re_omega']}",
            f"im_omega  = {payload['im_omega']}",
        ]
        _emit(args, payload, lines)
        return 0
    if not args.gamma:
        raise UsageError("induce g2 needs --gamma")
    s = psi0()
    gamma = parse_vector(args.gamma, 8)
    g = induce_g2(s, gamma)
    payload = {
        "schema": SCHEMA_VERSION,
        "engine": ENGINE_VERSION,
        "gamma": print_vector(gamma),
        "phi": print_form(g.phi),
        "star7_phi": print_form(g.star_phi),
    }
    _emit(args, payload, [f"gamma = {payload['gamma']}",
                          f"phi   = {payload['phi']}"])
    return 0


def cmd_mirror_report(args) -> int:
    if args.backend == "float":
        raise UsageError("mirror-report runs on the rational backend")
    g = phi0()
    xi = parse_vector(args.xi, 7)
    xip = parse_vector(getattr(args, "xi_prime"), 7)
    parts = args.plane.split(",")
    if len(parts) != 2:
        raise UsageError("--lambda needs two comma-separated vector expressions")
    u, v = (parse_vector(t.strip(), 7) for t in parts)
    ledger = SignLedger()
    suite = IdentitySuite()
    transfer_ok = structure_transfer_check(g, xi, xip, suite)
    a_form, w_form, witness_ok = global_witness_forms(g, xi, xip, suite)
    split = split_from_2plane(g, u, v)
    cls_xi = classify_mirror_type(g, split, xi)
    cls_xip = classify_mirror_type(g, split, xip)
    bnd = boundary_reports(g, (u, v), xi, xip)
    signs = suite.commit_all(ledger)
    payload = {
        "schema": SCHEMA_VERSION,
        "engine": ENGINE_VERSION,
        "xi": print_vector(xi),
        "xi_prime": print_vector(xip),
        "plane": [print_vector(u), print_vector(v)],
        "transfer_identities_pass": transfer_ok,
        "witness_forms_pass": witness_ok,
        "witness_3form": print_form(a_form),
        "witness_2form": print_form(w_form),
        "classification": {"xi": cls_xi, "xi_prime": cls_xip},
        "interpolation": {
            tag: {
                "sympl_weight": str(r["sympl_weight"]),
                "cplx_weight": str(r["cplx_weight"]),
                "xi_dd": print_vector(r["xi_dd"]),
                "re_equals_re_omega": r["re_equals_re_omega"],
                "re_in_real_span": r["re_in_real_span"],
                "span_coefficients": (
                    [str(c) for c in r["span_coefficients"]]
                    if r["span_coefficients"] is not None else None
                ),
            }
            for tag, r in bnd.items()
        },
        "signs": signs,
    }
    ok = transfer_ok and witness_ok
    lines = [
        f"transfer identities : {'PASS' if transfer_ok else 'FAIL'}",
        f"witness forms       : {'PASS' if witness_ok else 'FAIL'}",
        f"type at xi          : {cls_xi}",
        f"type at xi'         : {cls_xip}",
        "interpolation       : "
        + "; ".join(
            f"{tag}: weights ({r['sympl_weight']}, {r['cplx_weight']}), "
            f"xi'' = {print_vector(r['xi_dd'])}"
            for tag, r in bnd.items()
        ),
    ]
    _emit(args, payload, lines)
    return 0 if ok else 1


def cmd_triality(args) -> int:
    if args.backend == "float":
        raise UsageError("triality runs on the rational backend")
    s = psi0()
    alpha = parse_vector(args.alpha, 8)
    beta = parse_vector(args.beta, 8)
    gamma = parse_vector(args.gamma, 8)
    ledger = SignLedger()
    suite = IdentitySuite()
    checks = triality_checks(s, alpha, beta, gamma, suite)
    signs = suite.commit_all(ledger)
    kd = split_from_3frame(s, Vector.basis(8, 1), Vector.basis(8, 2),
                           Vector.basis(8, 3))
    table = triality_table(s, kd)
    payload = {
        "schema": SCHEMA_VERSION,
        "engine": ENGINE_VERSION,
        "frame": [print_vector(x) for x in (alpha, beta, gamma)],
        "identities": checks,
        "signs": signs,
        "table": table,
    }
    ok = all(checks.values())
    lines = [
        f"{'PASS' if v else 'FAIL'}  {k}" for k, v in checks.items()
    ] + [
        "table:",
    ] + [
        f"  {tag}: "
        + ", ".join(
            f"{c}={r[c]}"
            for c in ("X_alpha_gamma", "X_alpha_beta", "X_beta_gamma",
                      "X_beta_alpha")
        )
        + ("  (matches reference diagram)" if r["matches_reference_diagram"]
           else "  (DEVIATES from reference diagram)")
        for tag, r in table.items()
    ]
    _emit(args, payload, lines)
    return 0 if ok else 1


def cmd_equiv(args) -> int:
    if args.backend == "float":
        raise UsageError("equiv runs on the rational backend")
    a = parse_form(args.a, args.dim)
    b = parse_form(args.b, args.dim)
    witness = find_signed_permutation(a, b)
    if witness is None:
        payload = {"schema": SCHEMA_VERSION, "engine": ENGINE_VERSION,
                   "found": False}
        _emit(args, payload, ["no signed permutation carries a onto b"])
        return 1
    verified = witness.pullback(a) == b
    payload = {
        "schema": SCHEMA_VERSION,
        "engine": ENGINE_VERSION,
        "found": True,
        "perm": list(witness.perm),
        "signs": list(witness.signs),
        "reverified": verified,
    }
    lines = [
        f"perm  = {list(witness.perm)}",
        f"signs = {list(witness.signs)}",
        f"reverified: {verified}",
    ]
    _emit(args, payload, lines)
    return 0 if verified else 1


class UsageError(Exception):
    pass


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        if args.command == "verify":
            return cmd_verify(args)
        if args.command == "induce":
            return cmd_induce(args)
        if args.command == "mirror-report":
            return cmd_mirror_report(args)
        if args.command == "triality":
            return cmd_triality(args)
        if args.command == "equiv":
            return cmd_equiv(args)
        raise UsageError(f"unknown command {args.command!r}")
    except (UsageError, ParseError, ExteriorError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except VaryingSignError as exc:
        print(f"verification failure: {exc}", file=sys.stderr)
        return 1
    except AssertionError as exc:
        print(f"verification failure: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
