"""Command line entry point.

    kohnalg run PROBLEM.json [--format machine|human] [--max-steps N]
                             [--radical-mode MODE] [--out PATH]

Exit status: 0 when the run terminated with a unit, 2 when it stabilized
undetermined or exhausted the step cap, 1 on any input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .kohn import ProblemValidationError
from .parser import ParseError
from .trace_io import emit_report, run_problem


class _ArgumentParser(argparse.ArgumentParser):
    # input errors (including usage errors) exit 1, reserving 2 for
    # undetermined runs
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(
        prog="kohnalg",
        description="Exact multiplier-ideal runs on polynomial defining functions.")
    sub = parser.add_subparsers(dest="command", required=True)
    runp = sub.add_parser("run", help="run the procedure on a JSON problem file")
    runp.add_argument("problem", type=Path, help="path to the problem file")
    runp.add_argument("--format", choices=("machine", "human"), default="machine",
                      help="report format (default: machine)")
    runp.add_argument("--max-steps", type=int, default=None,
                      help="override the step cap")
    runp.add_argument("--radical-mode", choices=("full", "radical-only", "sos-only"),
                      default=None, help="override the closure mode")
    runp.add_argument("--out", type=Path, default=None,
                      help="write the report to a file instead of stdout")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        data = json.loads(args.problem.read_text())
    except OSError as exc:
        print(f"kohnalg: error: cannot read problem file: {exc}", file=sys.stderr)
        return 1
    except json.JSONDecodeError as exc:
        print(f"kohnalg: error: problem file is not valid JSON: {exc}", file=sys.stderr)
        return 1
    try:
        document = run_problem(data, max_steps=args.max_steps,
                               radical_mode=args.radical_mode)
    except (ParseError, ProblemValidationError, ValueError) as exc:
        print(f"kohnalg: error: {exc}", file=sys.stderr)
        return 1
    report = emit_report(document, args.format)
    if args.out is not None:
        args.out.write_text(report)
    else:
        sys.stdout.write(report)
    return 0 if document["status"]["kind"] == "terminated" else 2


if __name__ == "__main__":
    raise SystemExit(main())
