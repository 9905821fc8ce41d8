"""Command line front end.

Exit codes: 0 success, 1 mathematical mismatch or invariant violation,
2 enumeration budget exceeded, 3 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from typing import TextIO

from . import closed_form, lcverify, oracle, pgd
from .exactpoly import IntPoly
from .report import FAIL, PASS, Check
from .suites import SUITES, run_suite

EXIT_OK, EXIT_MISMATCH, EXIT_BUDGET, EXIT_USAGE = 0, 1, 2, 3
METHODS = ("matrix", "closed", "gf", "oracle")


@dataclass
class OutputRecord:
    command: str
    family: str | None = None
    n: int | None = None
    method: str | None = None
    coeffs: list[str] | None = None
    pgd: dict[str, list[str]] | None = None
    report: list[Check] | None = None
    status: str = PASS

    def to_json(self) -> dict:
        return {
            "command": self.command,
            "family": self.family,
            "n": self.n,
            "method": self.method,
            "coeffs": self.coeffs,
            "pgd": self.pgd,
            "report": None if self.report is None else [c.to_json() for c in self.report],
            "status": self.status,
        }

    @classmethod
    def from_json(cls, data: dict) -> OutputRecord:
        report = data.get("report")
        return cls(
            command=data["command"],
            family=data.get("family"),
            n=data.get("n"),
            method=data.get("method"),
            coeffs=data.get("coeffs"),
            pgd=data.get("pgd"),
            report=None if report is None else [Check.from_json(c) for c in report],
            status=data.get("status", PASS),
        )

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True, separators=(",", ":"))


def _strs(p) -> list[str]:
    return [str(c) for c in p.coeffs] or ["0"]


def render_table(rec: OutputRecord) -> str:
    lines = []
    head = " ".join(str(v) for v in (rec.command, rec.family and f"{rec.family}_{rec.n}", rec.method) if v)
    lines.append(f"# {head}  [{rec.status}]")
    if rec.coeffs is not None:
        lines.append(f"{'genus':>5}  count")
        lines += [f"{i:>5}  {c}" for i, c in enumerate(rec.coeffs)]
    if rec.pgd is not None:
        for label, cs in rec.pgd.items():
            lines.append(f"{label:>5}  {' '.join(cs)}")
    if rec.report is not None:
        for c in rec.report:
            wit = " ".join(f"{k}={v}" for k, v in c.witness.items())
            lines.append(f"{c.status:<8}  {c.name}" + (f"  ({wit})" if wit else ""))
    return "\n".join(lines)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _nonneg(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError("must be nonnegative")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "table"), default="json")
    common.add_argument("--budget", type=_nonneg, default=None,
                        help="maximum rotation systems to enumerate (default 2^24 or $RINGEL_BUDGET)")
    common.add_argument("--threads", type=_nonneg, default=1)
    common.add_argument("--slow", action="store_true", help="raise oracle bounds in verify suites")
    common.add_argument("--out", default=None, help="also write the records to this file")

    parser = _Parser(prog="ringel", description="Genus distributions of symmetric and Ringel ladders.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    g = sub.add_parser("genus", parents=[common], help="genus polynomial of RL_n")
    g.add_argument("--n", type=_nonneg, required=True)
    g.add_argument("--method", choices=METHODS, default="matrix")

    p = sub.add_parser("pgd", parents=[common], help="partitioned genus distribution of L_n")
    p.add_argument("--n", type=_nonneg, required=True)
    p.add_argument("--method", choices=("matrix", "gf", "oracle"), default="matrix")

    lc = sub.add_parser("lc", parents=[common], help="log-concavity scan")
    lc.add_argument("--max-n", type=int, required=True)

    v = sub.add_parser("verify", parents=[common], help="run an acceptance suite")
    v.add_argument("--suite", choices=SUITES, required=True)
    return parser


def _genus(args) -> OutputRecord:
    n = args.n
    if args.method == "matrix":
        d = pgd.ringel_genus_poly_matrix(n)
    elif args.method == "closed":
        d = closed_form.ringel_closed_form(n)
    elif args.method == "gf":
        d = closed_form.gf_series(n + 1)[n]
    else:
        d = oracle.oracle_genus_distribution(oracle.build_ringel_ladder(n), args.budget, args.threads)
    return OutputRecord("genus", "RL", n, args.method, _strs(d))


def _pgd(args) -> OutputRecord:
    n = args.n
    if args.method == "matrix":
        v = pgd.symmetric_ladder_pgd(n)
    elif args.method == "gf":
        v = closed_form.pgd_generating_components(n + 1).vector(n)
    else:
        v = oracle.oracle_pgd(n, args.budget, args.threads)
    total = pgd.pgd_total(v)
    return OutputRecord("pgd", "L", n, args.method, _strs(total),
                        pgd={lab: _strs(c) for lab, c in v.as_dict().items()})


def _lc(args) -> OutputRecord:
    if args.max_n < 2:
        raise _UsageError("--max-n must be at least 2")
    scan = lcverify.lc_scan(args.max_n, workers=args.threads)
    report = [Check(f"f(n, j) >= 0 for 2 <= n <= {args.max_n}", PASS if scan.ok else FAIL,
                    {"pairs": str(scan.pairs_checked), "violations": str(len(scan.violations))})]
    report += [Check(f"violation n={n} j={j}", FAIL, {"f": str(f)}) for n, j, f in scan.violations]
    return OutputRecord("lc", "RL", args.max_n, None, None, report=report,
                        status=PASS if scan.ok else FAIL)


def _verify(args) -> OutputRecord:
    checks = run_suite(args.suite, slow=args.slow, workers=args.threads)
    ok = all(c.ok for c in checks)
    return OutputRecord("verify", None, None, args.suite, None, report=checks, status=PASS if ok else FAIL)


class _UsageError(Exception):
    pass


def _emit(rec: OutputRecord, fmt: str, stream: TextIO) -> None:
    stream.write((rec.dumps() if fmt == "json" else render_table(rec)) + "\n")


def main(argv: list[str] | None = None, stdout: TextIO | None = None) -> int:
    stdout = sys.stdout if stdout is None else stdout
    args = build_parser().parse_args(argv)
    handler = {"genus": _genus, "pgd": _pgd, "lc": _lc, "verify": _verify}[args.command]
    try:
        rec = handler(args)
    except oracle.BudgetExceeded as exc:
        print(f"ringel: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except _UsageError as exc:
        print(f"ringel: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"ringel: invariant violated: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    _emit(rec, args.format, stdout)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            _emit(rec, args.format, fh)
    return EXIT_OK if rec.status == PASS else EXIT_MISMATCH


def run() -> None:
    sys.exit(main())


def poly_from_strings(cs: list[str]) -> IntPoly:
    return IntPoly(int(c) for c in cs)
