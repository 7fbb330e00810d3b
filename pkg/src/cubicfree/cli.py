"""Command-line front end.

Exit codes: 0 success, 2 parse error, 3 unsupported singularity,
4 reproduction failure, 5 criterion not applicable (non-smooth cubic,
non-reduced input, failed stabilization, ...).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from . import arrangement_io as aio
from . import combinatorics as cb
from .builders import EXAMPLES, example
from .census import DEFAULT_TOL, census
from .errors import CubicFreeError, ParseError, UnknownExample, UnsupportedSingularity
from .jacobian import Verdict, analyze, hilbert_tail
from .poly import to_text

EXIT_OK, EXIT_PARSE, EXIT_UNSUPPORTED, EXIT_REPRO, EXIT_NOT_APPLICABLE = 0, 2, 3, 4, 5


def _provenance(args, **extra) -> dict:
    out = {"tool": "cubicfree", "version": __version__}
    for key in ("seed", "tol"):
        if hasattr(args, key):
            out[key] = getattr(args, key)
    out.update(extra)
    return out


def _emit(report: dict, args, text_lines: list[str]) -> None:
    if getattr(args, "json", False):
        sys.stdout.write(json.dumps(report, indent=2, sort_keys=True) + "\n")
    else:
        sys.stdout.write("\n".join(text_lines) + "\n")


def cmd_analyze(args) -> int:
    arr = aio.load(args.file)
    lines = [f"arrangement: {arr.label or args.file}"]
    report: dict = {"command": "analyze", "file": str(args.file), "label": arr.label}
    wc = None
    if arr.components:
        res = census(arr, args.tol, args.seed)
        wc = res.wc
        report["census"] = res.to_dict()
        lines.append(f"census: k={wc.k} d={wc.d} n2={wc.n2} n3={wc.n3} t5={wc.t5} "
                     f"(min cluster gap {res.min_gap if res.min_gap is None else f'{res.min_gap:.3g}'})")
        if arr.k and arr.d and arr.m >= 6:
            lhs, rhs = cb.hirzebruch_sides(wc)
            report["hirzebruch"] = {"lhs": lhs, "rhs": rhs, "pass": lhs >= rhs}
            lines.append(f"hirzebruch (x4): {lhs} >= {rhs}: {lhs >= rhs}")
    f = arr.exact_product()
    if f is None:
        report["analysis"] = None
        lines.append("no exact product polynomial available; algebraic analysis skipped")
        report["provenance"] = _provenance(args)
        _emit(report, args, lines)
        return EXIT_OK
    rep = analyze(f, wc, method=args.method)
    window = cb.degree_window(f.degree)
    tail = hilbert_tail(f, args.method)
    smooth = rep.tau_algebraic == 0
    report["analysis"] = rep.to_dict()
    report["analysis"]["smooth"] = smooth
    report["window"] = window.to_dict()
    report["hilbert_tail"] = [[t, h] for t, h in tail]
    report["product"] = to_text(f)
    lines += [
        f"degree m = {rep.m}",
        f"mdr(f) = {rep.d1}",
        f"Hilbert function of S/J_f: " + ", ".join(f"H({t})={h}" for t, h in tail),
        f"tau (algebraic) = {rep.tau_algebraic}",
    ]
    if rep.tau_combinatorial is not None:
        agree = rep.tau_combinatorial == rep.tau_algebraic
        report["tau_agree"] = agree
        lines.append(f"tau (combinatorial) = {rep.tau_combinatorial} ({'agrees' if agree else 'DISAGREES'})")
    lines.append(f"mdr window: [{window.lower}, {window.upper}] -> {window.admissible or 'empty'}")
    if smooth:
        lines.append("verdict: smooth curve (tau = 0); freeness question vacuous")
    else:
        lines.append(f"verdict: {rep.verdict.value}" + (f", exponents {rep.exponents}" if rep.exponents else ""))
    lines.append(f"reason: {rep.reason}")
    report["provenance"] = _provenance(args, method=args.method)
    _emit(report, args, lines)
    return EXIT_OK


def cmd_enumerate(args) -> int:
    k, d = args.cubics, args.lines
    if k < 1 or d < 1:
        raise ParseError("--cubics and --lines must both be at least 1")
    m = 3 * k + d
    window = cb.degree_window(m)
    targets = {cb.free_tau(m, d1): d1 for d1 in window.admissible}
    tag = cb.hirzebruch_applicable(k, d)
    rows = []
    for wc in cb.enumerate_admissible(k, d):
        tau = cb.tau_candidate(*wc.singularities)
        d1 = targets.get(tau)
        hz = cb.hirzebruch_check(wc) if tag else None
        if args.free_only and d1 is None:
            continue
        if args.hirzebruch_filter and hz is False:
            continue
        rows.append({"n2": wc.n2, "n3": wc.n3, "t5": wc.t5, "count": cb.singular_cost(*wc.singularities),
                     "tau": tau, "d1": d1, "hirzebruch": hz})
    report = {
        "command": "enumerate",
        "k": k, "d": d, "m": m,
        "count": cb.combinatorial_count(k, d),
        "window": window.to_dict(),
        "free_taus": sorted(targets),
        "rows": rows,
        "provenance": _provenance(args),
    }
    lines = [f"k={k} d={d} m={m}: {cb.combinatorial_count(k, d)} = n2 + 3 n3 + 3 t5",
             f"mdr window {window.admissible or 'empty'}; tau needed for freeness: "
             f"{', '.join(f'{t} (d1={d1})' for t, d1 in targets.items()) or 'none'}",
             f"{'n2':>4} {'n3':>4} {'t5':>4} {'tau':>5} {'d1':>4} {'hirzebruch':>10}"]
    for r in rows:
        hz = "n/a" if r["hirzebruch"] is None else ("pass" if r["hirzebruch"] else "fail")
        d1 = "-" if r["d1"] is None else r["d1"]
        lines.append(f"{r['n2']:>4} {r['n3']:>4} {r['t5']:>4} {r['tau']:>5} {d1:>4} {hz:>10}")
    lines.append(f"{len(rows)} rows")
    _emit(report, args, lines)
    return EXIT_OK


def cmd_window(args) -> int:
    if args.degree < 3:
        raise ParseError("--degree must be at least 3")
    w = cb.degree_window(args.degree)
    verdict = "cannot be free" if w.empty else "free only with mdr in the window"
    report = {"command": "window", **w.to_dict(), "verdict": verdict, "provenance": _provenance(args)}
    lines = [f"m = {w.m}: {w.lower} <= mdr <= {w.upper}",
             f"admissible mdr: {w.admissible or 'empty'}",
             f"an arrangement with A1, D4, A5 points of this degree {verdict}"]
    _emit(report, args, lines)
    return EXIT_OK


def cmd_example(args) -> int:
    arr = example(args.name)
    text = aio.dumps(arr)
    if aio.dumps(aio.loads(text)) != text:
        raise ParseError("example file does not round-trip")
    if args.emit:
        with open(args.emit, "w") as fh:
            fh.write(text)
    report = {
        "command": "example",
        "name": args.name.upper(),
        "label": arr.label,
        "components": len(arr.components),
        "k": arr.k, "d": arr.d, "m": arr.m,
        "product": to_text(arr.product),
        "emitted": args.emit,
        "provenance": _provenance(args),
    }
    lines = [f"{args.name.upper()}: {arr.label}",
             f"{len(arr.components)} components (k={arr.k}, d={arr.d}), product of degree {arr.m}:",
             f"  {to_text(arr.product)}"]
    if args.emit:
        lines.append(f"written to {args.emit}")
    elif not args.json:
        lines.append(text.rstrip())
    _emit(report, args, lines)
    return EXIT_OK


def cmd_reproduce(args) -> int:
    from .reproduce import groups, run_checks

    try:
        outcomes = run_checks(args.only)
    except KeyError as exc:
        raise ParseError(str(exc.args[0])) from None
    failed = [o for o in outcomes if not o.passed]
    report = {
        "command": "reproduce",
        "only": args.only,
        "checks": [o.to_dict() for o in outcomes],
        "passed": len(outcomes) - len(failed),
        "failed": len(failed),
        "groups": groups(),
        "provenance": _provenance(args),
    }
    lines = [f"{'PASS' if o.passed else 'FAIL'}  [{o.group}] {o.id}: {o.claim} -- {o.detail}" for o in outcomes]
    lines.append(f"{len(outcomes) - len(failed)}/{len(outcomes)} checks passed")
    _emit(report, args, lines)
    return EXIT_REPRO if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="cubicfree", description="Freeness and weak combinatorics of cubic-line arrangements.")
    p.add_argument("--version", action="version", version=f"cubicfree {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", help="census, mdr, Tjurina number and freeness verdict for an arrangement file")
    a.add_argument("file")
    a.add_argument("--json", action="store_true")
    a.add_argument("--tol", type=float, default=DEFAULT_TOL)
    a.add_argument("--seed", type=int, default=0)
    a.add_argument("--method", choices=("exact", "modular", "both"), default="exact",
                   help="rank computation (default: exact fraction-free elimination)")
    a.set_defaults(func=cmd_analyze)

    e = sub.add_parser("enumerate", help="admissible weak combinatorics for k cubics and d lines")
    e.add_argument("--cubics", type=int, required=True)
    e.add_argument("--lines", type=int, required=True)
    e.add_argument("--free-only", action="store_true")
    e.add_argument("--hirzebruch-filter", action="store_true")
    e.add_argument("--json", action="store_true")
    e.set_defaults(func=cmd_enumerate)

    w = sub.add_parser("window", help="admissible mdr values for a free arrangement of degree M")
    w.add_argument("--degree", type=int, required=True)
    w.add_argument("--json", action="store_true")
    w.set_defaults(func=cmd_window)

    x = sub.add_parser("example", help=f"built-in arrangements: {', '.join(EXAMPLES)}")
    x.add_argument("name")
    x.add_argument("--emit", metavar="FILE")
    x.add_argument("--json", action="store_true")
    x.set_defaults(func=cmd_example)

    r = sub.add_parser("reproduce", help="run the reproduction matrix")
    r.add_argument("--only", metavar="GROUP")
    r.add_argument("--json", action="store_true")
    r.set_defaults(func=cmd_reproduce)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, UnknownExample) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except UnsupportedSingularity as exc:
        print(f"unsupported singularity: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except CubicFreeError as exc:
        print(f"not applicable: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_NOT_APPLICABLE


if __name__ == "__main__":
    sys.exit(main())
