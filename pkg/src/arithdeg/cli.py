"""Command line: ``arithdeg degree | table | verify``.

Exit codes: 0 success, 1 verification failure, 2 hypothesis violation,
64 usage error.
"""

from __future__ import annotations

import argparse
import sys
import time

from . import serialize
from .arithmetic import validate_field
from .degree import Setting, degree_Y, degree_Z
from .errors import ArithDegError, ConsistencyError, HypothesisError
from .verify import run_suites

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_HYPOTHESIS = 2
EXIT_USAGE = 64


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(f"{self.prog}: error: {message}")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="arithdeg",
                     description="Arithmetic degrees of special cycles of QM abelian surfaces.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p):
        p.add_argument("--dk", type=int, required=True, help="fundamental discriminant d_K < 0")
        p.add_argument("--db", type=int, required=True, help="discriminant d_B of B")
        p.add_argument("--stack", choices=("Y", "Z"), default="Y")
        p.add_argument("--format", choices=("text", "json", "csv"), default="text")
        p.add_argument("--allow-degenerate", action="store_true",
                       help="accept d_B = 1 (matrix algebra) for Y")

    deg = sub.add_parser("degree", help="evaluate one arithmetic degree")
    common(deg)
    deg.add_argument("--m", type=int, required=True)

    table = sub.add_parser("table", help="sweep m = 1 .. m-max")
    common(table)
    table.add_argument("--m-max", type=int, required=True)

    ver = sub.add_parser("verify", help="run the oracle suites")
    ver.add_argument("--level", choices=("quick", "full"), default="quick")
    return parser


def _evaluator(args):
    field = validate_field(args.dk)
    if args.stack == "Z":
        if args.db != 1:
            raise UsageError("stack Z has no quaternion algebra; pass --db 1")
        return lambda m: degree_Z(field, m)
    setting = Setting.build(field, args.db, allow_degenerate=args.allow_degenerate)
    return lambda m: degree_Y(setting, m)


def _render(reports, fmt, stack, single):
    if fmt == "csv":
        return serialize.to_csv(reports)
    if fmt == "json":
        return "".join(serialize.to_json(r) + "\n" for r in reports)
    if single:
        return serialize.to_text(reports[0])
    return serialize.to_table_text(reports, stack)


def cmd_degree(args, out) -> int:
    if args.m < 1:
        raise UsageError("--m must be a positive integer")
    report = _evaluator(args)(args.m)
    out.write(_render([report], args.format, args.stack, single=True))
    return EXIT_OK


def cmd_table(args, out) -> int:
    if args.m_max < 0:
        raise UsageError("--m-max must be nonnegative")
    evaluate = _evaluator(args)
    reports = [evaluate(m) for m in range(1, args.m_max + 1)]
    out.write(_render(reports, args.format, args.stack, single=False))
    return EXIT_OK


def cmd_verify(args, out) -> int:
    start = time.perf_counter()
    results = run_suites(args.level)
    for i, res in enumerate(results, 1):
        status = "PASS" if res.passed else "FAIL"
        detail = f"{res.cases} cases" if res.passed else f"counterexample: {res.counterexample}"
        out.write(f"[{status}] suite {i}: {res.name} ({detail})\n")
    passed = sum(r.passed for r in results)
    out.write(f"{passed}/{len(results)} suites passed\n")
    print(f"verify --level {args.level}: {time.perf_counter() - start:.1f}s", file=sys.stderr)
    return EXIT_OK if passed == len(results) else EXIT_VERIFY_FAILED


COMMANDS = {"degree": cmd_degree, "table": cmd_table, "verify": cmd_verify}


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    try:
        args = build_parser().parse_args(argv)
        return COMMANDS[args.command](args, out)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    except ConsistencyError as exc:
        print(f"arithdeg: internal consistency check failed: {exc}", file=sys.stderr)
        return EXIT_VERIFY_FAILED
    except HypothesisError as exc:
        print(f"arithdeg: hypothesis violated: {exc}", file=sys.stderr)
        return EXIT_HYPOTHESIS
    except ArithDegError as exc:
        print(f"arithdeg: {exc}", file=sys.stderr)
        return EXIT_HYPOTHESIS


if __name__ == "__main__":
    sys.exit(main())
