"""Command line front end: one rendering job per invocation.

Exit codes: 0 success, 1 malformed CSV (diagnostics carry file and line),
2 usage error.
"""

from __future__ import annotations

import argparse
import sys

from .figures import KINDS, PlotJob, render
from .io import SchemaError


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hjplots",
        description="Render solver CSV artifacts (tables, delta histories, "
        "field dumps) to PNG figures.",
    )
    parser.add_argument("kind", choices=KINDS, help="figure kind")
    parser.add_argument("inputs", nargs="+", help="input CSV artifacts")
    parser.add_argument("--out", required=True, help="output PNG path")
    return parser


def run_command(argv) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        job = PlotJob(tuple(args.inputs), args.kind, args.out)
        path = render(job)
    except SchemaError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    print(path)
    return 0


def main() -> None:
    sys.exit(run_command(sys.argv[1:]))


if __name__ == "__main__":
    main()
