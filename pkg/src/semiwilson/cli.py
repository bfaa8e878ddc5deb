"""Command-line entry point.

Exit codes: 0 when every check passes, 1 on a mathematical mismatch or failed
sampled check, 2 on usage or input errors.  JSON goes to stdout (or ``-o``),
a short human summary to stderr.  Defaults can be overridden through
``WSL_``-prefixed environment variables.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import logging
import os
import sys
from contextlib import nullcontext

from . import __version__
from .catalog import (
    IoError,
    ParseError,
    ReportDocument,
    build_catalog,
    conformance_to_json,
    context_summary,
    dumps,
    emit_report,
    format_cayley,
    load_cayley,
    write_atomic,
)
from .characters import ComplexMap, WilsonContext, chi_decompose, enumerate_contexts, invariant_sets_check, nonzero_characters
from .conformance import conformance_check
from .continuous import PreconditionViolated, run_examples
from .cyclotomic import ONE, Cyc
from .semigroup import MAX_ORDER, Automorphism, LimitExceeded, NotAnAutomorphism, NotAssociative, identity_automorphism
from .wilson import injected_sign_bug, solve_f_given_g

log = logging.getLogger("semiwilson")

DEFAULTS = {
    "max_order": 4,
    "seed": 20240101,
    "samples": 1000,
    "tolerance": 1e-9,
    "jobs": 1,
}


def _env(name: str, cast, default):
    raw = os.environ.get(f"WSL_{name.upper()}")
    if raw is None:
        return default
    try:
        return cast(raw)
    except ValueError:
        raise SystemExit(f"invalid WSL_{name.upper()}={raw!r}")


def _complex(text: str) -> complex:
    return complex(text.replace(" ", "").replace("i", "j"))


class UsageError(Exception):
    pass


def _write(payload: dict | str, output: str | None) -> None:
    text = payload if isinstance(payload, str) else json.dumps(payload, sort_keys=True, indent=2) + "\n"
    if output:
        write_atomic(output, text)
    else:
        sys.stdout.write(text)


def _sets(s) -> list[int]:
    return sorted(s)


# -- subcommands -----------------------------------------------------------------


def cmd_gen(args) -> int:
    cap = 5 if args.allow_order_5 else args.order_cap
    if args.max_order == 5 and args.allow_order_5:
        log.warning("order 5 enumeration takes minutes to hours")
    try:
        doc = build_catalog(args.max_order, order_cap=cap, jobs=args.jobs, probe=args.probe)
    except LimitExceeded as exc:
        raise UsageError(str(exc)) from None
    if args.output:
        emit_report(doc, args.output)
    else:
        sys.stdout.write(dumps(doc))
    s = doc.summary
    print(f"catalog: {s['semigroups']} semigroups, {s['contexts']} contexts, "
          f"{s['falsifications']} falsified", file=sys.stderr)
    return 1 if doc.falsifications else 0


def _contexts_for(S, sigma_text: str | None, mu_text: str | None):
    if sigma_text is None and mu_text is None:
        return list(enumerate_contexts(S))
    sigma = identity_automorphism(S) if sigma_text is None else Automorphism(S, [int(v) for v in sigma_text.split(",")])
    mu = ComplexMap([ONE] * S.order) if mu_text is None else ComplexMap(Cyc.parse(v) for v in mu_text.split(";"))
    return [WilsonContext(S, sigma, mu)]


def cmd_analyze(args) -> int:
    S = load_cayley(args.cayley_file)
    contexts = []
    for ctx in enumerate_contexts(S):
        chars = []
        for chi in nonzero_characters(S):
            dec = chi_decompose(S, chi)
            closed = all(S.table[x][y] in dec.P_chi for x in dec.P_chi for y in dec.P_chi)
            chars.append({
                "chi": chi.to_json(),
                "I_chi": _sets(dec.I_chi),
                "I_chi_sq": _sets(dec.I_chi_sq),
                "P_chi": _sets(dec.P_chi),
                "complement": _sets(dec.complement),
                "P_chi_closed": closed,
                "invariant_sets": invariant_sets_check(S, chi, ctx.sigma).status,
            })
        contexts.append({"context_id": ctx.context_id, "sigma": list(ctx.sigma.perm), "mu": ctx.mu.to_json(), "characters": chars})
    _write({"table": [list(r) for r in S.table], "contexts": contexts}, args.output)
    print(f"analyze: order {S.order}, {len(contexts)} contexts", file=sys.stderr)
    return 0


def cmd_solve(args) -> int:
    S = load_cayley(args.cayley_file)
    try:
        g = ComplexMap(Cyc.parse(v) for v in args.g.split(";"))
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if len(g) != S.order:
        raise UsageError(f"g needs {S.order} values, got {len(g)}")
    (ctx,) = _contexts_for(S, args.sigma or ",".join(map(str, S.elements)), args.mu)
    space = solve_f_given_g(ctx, g)
    _write({
        "context_id": ctx.context_id,
        "g": g.to_json(),
        "dimension": space.dimension,
        "basis": [[str(x) for x in v] for v in space.basis],
    }, args.output)
    print(f"solve: nullspace dimension {space.dimension}", file=sys.stderr)
    return 0


def cmd_conform(args) -> int:
    if args.all is not None:
        if args.all > args.order_cap:
            raise UsageError(f"order {args.all} exceeds cap {args.order_cap}")
        with injected_sign_bug() if args.inject_bug else nullcontext():
            doc = build_catalog(args.all, order_cap=args.order_cap, jobs=args.jobs, probe=args.probe)
        if args.output:
            emit_report(doc, args.output)
        else:
            sys.stdout.write(dumps(doc))
        mismatches = doc.falsifications
        print(f"conform: {doc.summary['contexts']} contexts, {mismatches} semigroups with mismatches", file=sys.stderr)
        return 1 if mismatches else 0
    if not args.cayley_file:
        raise UsageError("conform needs a Cayley file or --all N")
    S = load_cayley(args.cayley_file)
    text = format_cayley(S)
    contexts = _contexts_for(S, args.sigma, args.mu)
    reports = []
    bad = 0
    with injected_sign_bug() if args.inject_bug else nullcontext():
        for ctx in contexts:
            summary, ok = context_summary(ctx, probe=args.probe)
            detail = conformance_to_json(conformance_check(ctx, probe=False))
            summary["detail"] = detail
            reports.append(summary)
            bad += not ok
    payload = {
        "input_digest": hashlib.sha256(text.encode()).hexdigest(),
        "table": [list(r) for r in S.table],
        "contexts": reports,
        "mismatches": bad,
    }
    _write(payload, args.output)
    print(f"conform: {len(contexts)} contexts, {bad} with mismatches", file=sys.stderr)
    return 1 if bad else 0


def cmd_examples(args) -> int:
    params = {
        "alpha": args.alpha, "lam": args.lam, "a": args.a, "b": args.b,
        "c": args.c, "form": args.form, "power": args.power,
    }
    params = {k: v for k, v in params.items() if v is not None}
    checks = run_examples(args.which, args.samples, args.seed, args.tolerance, args.perturb, **params)
    doc = ReportDocument(
        input_digest=hashlib.sha256(f"examples:{args.which}:{args.seed}:{args.samples}".encode()).hexdigest(),
        continuous=[c.to_json() for c in checks],
        summary={"failed": sum(not c.passed for c in checks)},
    )
    if args.output:
        emit_report(doc, args.output)
    else:
        sys.stdout.write(dumps(doc))
    for c in checks:
        print(f"{c.name}: {'pass' if c.passed else 'FAIL'} max residual {c.max_residual:.3e} (tol {c.tolerance:.0e})", file=sys.stderr)
    return 0 if all(c.passed for c in checks) else 1


# -- parser ------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-o", "--output", default=os.environ.get("WSL_OUTPUT"))
    common.add_argument("--seed", type=int, default=_env("seed", int, DEFAULTS["seed"]))
    common.add_argument("--samples", type=int, default=_env("samples", int, DEFAULTS["samples"]))
    common.add_argument("--tolerance", type=float, default=_env("tolerance", float, None))
    common.add_argument("--jobs", type=int, default=_env("jobs", int, DEFAULTS["jobs"]))
    common.add_argument("--order-cap", type=int, default=_env("order_cap", int, MAX_ORDER))
    common.add_argument("--probe", action="store_true", default=bool(_env("probe", int, 0)),
                        help="run the restricted brute-force value-set probe")
    common.add_argument("-v", "--verbose", action="count", default=0)

    parser = argparse.ArgumentParser(prog="semiwilson", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", parents=[common], help="build the catalog of small semigroups")
    p.add_argument("--max-order", type=int, default=_env("max_order", int, DEFAULTS["max_order"]))
    p.add_argument("--allow-order-5", action="store_true")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("analyze", parents=[common], help="dump I, I^2 and P for every character")
    p.add_argument("cayley_file")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("solve", parents=[common], help="nullspace of the equation for a fixed g")
    p.add_argument("cayley_file")
    p.add_argument("--g", required=True, help="';'-separated values such as '1:1/1;4:0/1,1/2'")
    p.add_argument("--sigma", help="comma-separated permutation (default identity)")
    p.add_argument("--mu", help="';'-separated weight values (default 1)")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("conform", parents=[common], help="compare theorem families with the linear oracle")
    p.add_argument("cayley_file", nargs="?")
    p.add_argument("--all", type=int, metavar="MAX_ORDER")
    p.add_argument("--sigma")
    p.add_argument("--mu")
    p.add_argument("--inject-bug", action="store_true", help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_conform)

    p = sub.add_parser("examples", parents=[common], help="sampled checks on the continuous groups")
    p.add_argument("--which", choices=["axb", "complex", "heisenberg", "interval", "all"], default="all")
    p.add_argument("--alpha", type=_complex)
    p.add_argument("--lambda", dest="lam", type=_complex)
    p.add_argument("--a", type=_complex)
    p.add_argument("--b", type=_complex)
    p.add_argument("--c", type=_complex)
    p.add_argument("--form", choices=["one", "abs", "signed"])
    p.add_argument("--power", type=_complex)
    p.add_argument("--perturb", action="store_true", help="negative control: break g on purpose")
    p.set_defaults(func=cmd_examples)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.WARNING - 10 * args.verbose, format="%(levelname)s %(message)s")
    try:
        return args.func(args)
    except (UsageError, ParseError, NotAssociative, NotAnAutomorphism, IoError, LimitExceeded,
            PreconditionViolated, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
