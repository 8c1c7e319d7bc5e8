"""Command-line front end.

Subcommands reproduce the ballot-number tables and polynomial displays,
run named verification suites, sweep the positivity conjecture, and export
Newton polytopes.  Output is deterministic: the same flags always produce
byte-identical text/JSON/CSV (SVG carries one fixed generator comment).

Exit codes: 0 all checks passed, 1 a verification failed, 2 usage or
configuration error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path
from typing import Optional, Sequence

from .analysis import (
    SUITES,
    NumeratorReport,
    newton_polytope,
    numerator,
    run_suite,
    svg_polytope,
)
from .ballot import TABLE, ballot, qballot, qcatalan, tilde_qcatalan
from .csequence import METHODS, c_family, c_theorem1, format_qbinom
from .qcore import to_qbinom_basis
from .report import SuiteReport


def _emit(text: str, out: Optional[Path]) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        out.write_text(text)


def _load_cache(path: Optional[Path]) -> None:
    if path is not None and path.exists():
        TABLE.load(str(path))


def _save_cache(path: Optional[Path]) -> None:
    if path is not None:
        TABLE.save(str(path))


def _csv_text(header: Sequence[str], rows: Sequence[Sequence[object]]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _json_text(data: object) -> str:
    return json.dumps(data, indent=2) + "\n"


# -- table --------------------------------------------------------------------


def cmd_table(args: argparse.Namespace) -> int:
    maxn = args.max_n
    if maxn < 0:
        raise ValueError("--max-n must be >= 0")
    _load_cache(args.cache)
    if args.which == 1:
        entries = [[int(ballot(n, k)) for k in range(n + 1)] for n in range(maxn + 1)]
    else:
        entries = [[str(qballot(n, k)) for k in range(n + 1)] for n in range(maxn + 1)]
    _save_cache(args.cache)
    if args.format == "json":
        rows = [{"n": n, "entries": entries[n]} for n in range(maxn + 1)]
        text = _json_text({"table": args.which, "max_n": maxn, "rows": rows})
    elif args.format == "csv":
        flat = [
            (n, k, entries[n][k])
            for n in range(maxn + 1)
            for k in range(n + 1)
        ]
        text = _csv_text(("n", "k", "polynomial"), flat)
    else:
        lines = [
            f"n={n}: " + ", ".join(str(e) for e in entries[n])
            for n in range(maxn + 1)
        ]
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    return 0


# -- single values ------------------------------------------------------------


def cmd_ballot(args: argparse.Namespace) -> int:
    if args.n < 0 or args.k < 0:
        raise ValueError("--n and --k must be >= 0")
    _load_cache(args.cache)
    poly = qballot(args.n, args.k)
    plain = int(ballot(args.n, args.k))
    _save_cache(args.cache)
    if args.format == "json":
        text = _json_text(
            {
                "n": args.n,
                "k": args.k,
                "value": plain,
                "polynomial": str(poly),
                "terms": poly.to_json(),
            }
        )
    elif args.format == "csv":
        text = _csv_text(("n", "k", "polynomial"), [(args.n, args.k, str(poly))])
    else:
        text = f"f({args.n},{args.k}|q) = {poly}\nf({args.n},{args.k}) = {plain}\n"
    _emit(text, args.out)
    return 0


def cmd_catalan(args: argparse.Namespace) -> int:
    maxn = args.max_n
    if maxn < 0:
        raise ValueError("--max-n must be >= 0")
    _load_cache(args.cache)
    rows = [
        (n, str(qcatalan(n)), str(tilde_qcatalan(n))) for n in range(maxn + 1)
    ]
    _save_cache(args.cache)
    if args.format == "json":
        text = _json_text(
            {
                "max_n": maxn,
                "rows": [
                    {"n": n, "catalan": c, "reversed": r} for n, c, r in rows
                ],
            }
        )
    elif args.format == "csv":
        text = _csv_text(("n", "catalan", "reversed"), rows)
    else:
        lines = []
        for n, c, r in rows:
            lines.append(f"C_{n}(q) = {c}")
            lines.append(f"reversed C_{n}(q) = {r}")
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    return 0


# -- the polynomial family ----------------------------------------------------


def cmd_cx(args: argparse.Namespace) -> int:
    if args.n < 1:
        raise ValueError("--n must be >= 1 (the family starts at C_1)")
    _load_cache(args.cache)
    poly = c_family(args.method, args.n).poly(args.n)
    _save_cache(args.cache)
    if args.basis == "qbinom":
        e = to_qbinom_basis(poly)
        coeffs = [str(c) for c in e.coeffs]
        if args.format == "json":
            text = _json_text(
                {
                    "n": args.n,
                    "method": args.method,
                    "basis": "qbinom",
                    "coeffs": coeffs,
                }
            )
        elif args.format == "csv":
            text = _csv_text(
                ("k", "coefficient"), list(enumerate(coeffs))
            )
        else:
            text = f"C_{args.n}(x|q) = {format_qbinom(e)}\n"
    else:
        coeffs = [str(c) for c in poly.coeffs]
        if args.format == "json":
            text = _json_text(
                {
                    "n": args.n,
                    "method": args.method,
                    "basis": "monomial",
                    "coeffs": coeffs,
                }
            )
        elif args.format == "csv":
            text = _csv_text(("k", "coefficient"), list(enumerate(coeffs)))
        else:
            text = f"C_{args.n}(x|q) = {poly}\n"
    _emit(text, args.out)
    return 0


# -- verification -------------------------------------------------------------


def _report_text(rep: SuiteReport) -> str:
    return "\n".join(rep.lines()) + "\n"


def cmd_verify(args: argparse.Namespace) -> int:
    if args.max_n < 0:
        raise ValueError("--max-n must be >= 0")
    _load_cache(args.cache)
    rep = run_suite(args.suite, args.max_n)
    _save_cache(args.cache)
    if args.format == "json":
        text = _json_text(rep.to_json())
    elif args.format == "csv":
        rows = [
            (r.id, r.n, "" if r.k is None else r.k, r.passed, r.detail or "")
            for r in rep.results
        ]
        text = _csv_text(("id", "n", "k", "pass", "detail"), rows)
    else:
        text = _report_text(rep)
    _emit(text, args.out)
    return 0 if rep.passed else 1


def cmd_conjecture(args: argparse.Namespace) -> int:
    maxn = args.max_n
    if maxn < 2:
        raise ValueError("--max-n must be >= 2")
    jobs = max(1, args.jobs)
    _load_cache(args.cache)
    ns = list(range(2, maxn + 1))

    def one(n: int) -> NumeratorReport:
        return numerator(n, c_theorem1(n - 1))

    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            reports = list(pool.map(one, ns))  # map preserves order
    else:
        reports = [one(n) for n in ns]
    _save_cache(args.cache)

    ok = all(r.ok for r in reports)
    if args.format == "json":
        rows = [
            {
                "n": r.n,
                "is_polynomial": r.is_polynomial,
                "is_irreducible_fraction": r.is_irreducible_fraction,
                "all_coeffs_positive": r.all_coeffs_positive,
                "coefficient_stats": [list(s) for s in r.coefficient_stats],
            }
            for r in reports
        ]
        text = _json_text({"max_n": maxn, "all_ok": ok, "results": rows})
    elif args.format == "csv":
        rows = [
            (r.n, r.is_polynomial, r.is_irreducible_fraction, r.all_coeffs_positive)
            for r in reports
        ]
        text = _csv_text(
            ("n", "is_polynomial", "is_irreducible_fraction", "all_coeffs_positive"),
            rows,
        )
    else:
        lines = []
        for r in reports:
            if r.ok:
                lines.append(f"n={r.n}: ok")
            else:
                lines.append(
                    f"n={r.n}: FAIL polynomial={r.is_polynomial} "
                    f"irreducible={r.is_irreducible_fraction} "
                    f"positive={r.all_coeffs_positive}"
                )
        lines.append(
            f"conjecture 2..{maxn}: " + ("all ok" if ok else "FAILURES above")
        )
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    return 0 if ok else 1


def cmd_polytope(args: argparse.Namespace) -> int:
    if args.n < 2:
        raise ValueError("--n must be >= 2 (P_1 is a single point)")
    _load_cache(args.cache)
    r = numerator(args.n, c_theorem1(args.n - 1))
    p = newton_polytope(r)
    _save_cache(args.cache)
    if args.format == "svg":
        text = svg_polytope(p, title=f"P_{args.n} exponents")
    else:
        text = _json_text({"n": args.n, **p.to_json()})
    _emit(text, args.out)
    return 0


# -- parser -------------------------------------------------------------------


def _add_io(sp: argparse.ArgumentParser, formats: Sequence[str]) -> None:
    sp.add_argument("--format", choices=formats, default=formats[0])
    sp.add_argument("--out", type=Path, default=None, help="write output here")
    sp.add_argument(
        "--cache", type=Path, default=None,
        help="load/save the ballot memo table as JSON",
    )


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="qballot",
        description="Exact q-ballot / q-Catalan computations and verification.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    t = sub.add_parser("table", help="triangle of (q-)ballot numbers")
    t.add_argument("which", type=int, choices=(1, 2),
                   help="1: integer ballot numbers, 2: q-weighted")
    t.add_argument("--max-n", type=int, default=6)
    _add_io(t, ("text", "json", "csv"))
    t.set_defaults(fn=cmd_table)

    b = sub.add_parser("ballot", help="one ballot number f(n,k|q)")
    b.add_argument("--n", type=int, required=True)
    b.add_argument("--k", type=int, required=True)
    _add_io(b, ("text", "json", "csv"))
    b.set_defaults(fn=cmd_ballot)

    c = sub.add_parser("catalan", help="q-Catalan numbers and their reversals")
    c.add_argument("--max-n", type=int, default=8)
    _add_io(c, ("text", "json", "csv"))
    c.set_defaults(fn=cmd_catalan)

    x = sub.add_parser("cx", help="the interpolating polynomial C_n(x|q)")
    x.add_argument("--n", type=int, required=True)
    x.add_argument("--method", choices=METHODS, default="theorem1")
    x.add_argument("--basis", choices=("monomial", "qbinom"), default="qbinom")
    _add_io(x, ("text", "json", "csv"))
    x.set_defaults(fn=cmd_cx)

    v = sub.add_parser("verify", help="run a named verification suite")
    v.add_argument("suite", choices=SUITES)
    v.add_argument("--max-n", type=int, default=8)
    _add_io(v, ("text", "json", "csv"))
    v.set_defaults(fn=cmd_verify)

    j = sub.add_parser("conjecture", help="positivity/irreducibility sweep")
    j.add_argument("--max-n", type=int, default=27)
    j.add_argument("--jobs", type=int, default=1,
                   help="worker threads across independent n")
    _add_io(j, ("text", "json", "csv"))
    j.set_defaults(fn=cmd_conjecture)

    g = sub.add_parser("polytope", help="Newton polytope of the numerator")
    g.add_argument("--n", type=int, required=True)
    _add_io(g, ("json", "svg"))
    g.set_defaults(fn=cmd_polytope)

    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except ValueError as exc:
        print(f"qballot: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"qballot: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
