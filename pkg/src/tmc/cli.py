"""The ``tmc`` command: enumeration runs, single-curve queries and self-checks.

Rows go to stdout, diagnostics to stderr.  Exit codes: 0 success, 1 usage
error, 2 invariant violation.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
import time

from . import __version__
from .cycgalois import prime_splitting
from .enumeration import (InvariantError, admissibility, curve_counts, enumerate_x0,
                          enumerate_x1, reduction_rows, row_counts)
from .ffarith import is_prime
from .genus import GenusError, GenusInput, genus_galois, genus_x0, genus_x1, pxl_order
from .triples import Triple, q_admissible

COLUMNS = ["family", "a", "b", "c", "p", "q", "pxl", "num_primes", "deg_E", "genus"]
EXIT_OK, EXIT_USAGE, EXIT_INVARIANT = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="tmc", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"tmc {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    en = sub.add_parser("enumerate", help="list all curves up to a genus bound")
    en.add_argument("--family", choices=["x0", "x1"], default="x0")
    en.add_argument("--genus-max", type=int, required=True)
    en.add_argument("--format", choices=["csv", "json"], default="csv")
    en.add_argument("--include-reductions", action="store_true",
                    help="append catalog rows of triples reducing to non-hyperbolic ones")

    ge = sub.add_parser("genus", help="genus and admissibility of one curve")
    ge.add_argument("a", type=int)
    ge.add_argument("b", type=int)
    ge.add_argument("c", type=int)
    ge.add_argument("--prime", "-p", type=int, required=True)
    ge.add_argument("--family", choices=["x0", "x1", "galois"], default="x0")

    ch = sub.add_parser("check", help="run the oracle suites")
    ch.add_argument("--level", choices=["quick", "full"], default="quick")
    ch.add_argument("--golden-dir", default=None,
                    help="directory holding x0_genus0.csv and x0_genus1.csv (default: bundled)")
    return parser


def _log(msg: str) -> None:
    print(msg, file=sys.stderr)


# ---------------------------------------------------------------------------

def cmd_enumerate(args, out=None) -> int:
    out = out or sys.stdout
    if args.genus_max < 0:
        raise UsageError("--genus-max must be >= 0")
    start = time.perf_counter()
    records = enumerate_x0(args.genus_max)
    if args.family == "x1":
        records = enumerate_x1(args.genus_max, x0_records=records)
    rows = [r.row() for r in records]
    columns = list(COLUMNS)
    if args.include_reductions:
        columns.append("reduction")
        for row in rows:
            row["reduction"] = "false"
        for red in reduction_rows(args.genus_max):
            a, b, c = red.triple
            rows.append({"family": args.family, "a": a, "b": b, "c": c, "p": red.p, "q": red.q,
                         "pxl": red.pxl, "num_primes": "", "deg_E": "", "genus": red.genus,
                         "reduction": "true"})
    if args.format == "csv":
        writer = csv.DictWriter(out, fieldnames=columns, lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
    else:
        meta = {"tool": "tmc", "version": __version__, "family": args.family,
                "genus_max": args.genus_max}
        json.dump({"meta": meta, "records": rows}, out, indent=1)
        out.write("\n")
    elapsed = time.perf_counter() - start
    curves, nrows = curve_counts(records), row_counts(records)
    for g in range(args.genus_max + 1):
        _log(f"genus {g}: {curves.get(g, 0)} curves ({nrows.get(g, 0)} rows)")
    _log(f"tmc {__version__}: {args.family}, genus <= {args.genus_max}, {elapsed:.2f} s")
    return EXIT_OK


def cmd_genus(args, out=None) -> int:
    out = out or sys.stdout
    if not is_prime(args.prime):
        raise UsageError(f"{args.prime} is not prime")
    if min(args.a, args.b, args.c) < 2:
        raise UsageError("entries must be >= 2")
    t = Triple.of(args.a, args.b, args.c)
    if not t.is_hyperbolic:
        raise UsageError(f"{t} is not hyperbolic (chi = {t.chi})")
    split = prime_splitting(t, args.prime)
    q, pxl = split.qE, split.pxl
    report = admissibility(t, args.prime)
    print(f"triple {t}  p={args.prime}  q={q}  PXL={'PSL' if pxl == 1 else 'PGL'}  "
          f"primes above p: {split.gE}  [E:Q]={split.degE}", file=out)
    if not report.admissible:
        print(f"inadmissible: {report.first_failure}", file=out)
        return EXIT_OK
    print(f"admissible at {report.num_primes} of {split.gE} primes", file=out)
    if args.family == "galois":
        g = genus_galois(t, pxl_order(q, pxl))
    else:
        if not q_admissible(t, q, args.prime):
            raise InvariantError(f"admissible {t} is not {q}-admissible")
        inp = GenusInput(t, args.prime, q, pxl)
        g = genus_x0(inp) if args.family == "x0" else genus_x1(inp)
    print(f"genus {g}", file=out)
    return EXIT_OK


def cmd_check(args, out=None) -> int:
    out = out or sys.stdout
    from . import checks

    start = time.perf_counter()
    results = checks.run_suite(args.level, args.golden_dir)
    failed = {name: fails for name, fails in results.items() if fails}
    for name, fails in results.items():
        _log(f"{'PASS' if not fails else 'FAIL'}  {name}")
    _log(f"check --level {args.level}: {time.perf_counter() - start:.1f} s")
    if failed:
        json.dump({"status": "fail", "failures": failed}, out, indent=1)
        out.write("\n")
        return EXIT_INVARIANT
    return EXIT_OK


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handler = {"enumerate": cmd_enumerate, "genus": cmd_genus, "check": cmd_check}[args.command]
    try:
        return handler(args)
    except UsageError as exc:
        _log(f"tmc: error: {exc}")
        return EXIT_USAGE
    except (InvariantError, GenusError) as exc:
        _log(f"tmc: invariant violation: {exc}")
        return EXIT_INVARIANT


if __name__ == "__main__":
    sys.exit(main())
