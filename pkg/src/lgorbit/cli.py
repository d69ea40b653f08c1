"""Command line entry point: `verify <suite> [--config FILE] [--seed N] [--json PATH]`.

Exit codes: 0 when every check passes (assumptions do not fail a run),
1 when any check fails, 2 for usage or configuration errors.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

from .errors import PreconditionError
from .report import SUITES, load_config, render_json, render_text, run


def _grid(text: str):
    parts = text.lower().split("x")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError("expected ROWSxCOLS, for example 9x64")
    try:
        return [int(parts[0]), int(parts[1])]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="verify",
        description="Run the verification suites and emit a JSON report.",
    )
    parser.add_argument("suite", choices=sorted(SUITES) + ["all"],
                        help="suite to run, or 'all'")
    parser.add_argument("--config", metavar="FILE", help="JSON config file")
    parser.add_argument("--seed", type=int, metavar="N", help="override the seed")
    parser.add_argument("--json", metavar="PATH", dest="json_path",
                        help="also write the JSON report to this file")
    parser.add_argument("--float-tolerance", type=float, metavar="TOL")
    parser.add_argument("--sphere-samples", type=int, metavar="N")
    parser.add_argument("--thimble-grid", type=_grid, metavar="RxC")
    parser.add_argument("--box-margin", type=int, metavar="M")
    parser.add_argument("--t-range", type=int, metavar="T")
    parser.add_argument("--shift-range", type=int, metavar="S")
    parser.add_argument("--k-max", type=int, metavar="K")
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    overrides = {
        "seed": args.seed,
        "float_tolerance": args.float_tolerance,
        "sphere_samples": args.sphere_samples,
        "thimble_grid": args.thimble_grid,
        "box_margin": args.box_margin,
        "t_range": args.t_range,
        "shift_range": args.shift_range,
        "k_max": args.k_max,
    }
    try:
        cfg = load_config(args.config, overrides)
    except (OSError, ValueError) as exc:
        # PreconditionError is a ValueError; malformed JSON also lands here
        print(f"verify: config error: {exc}", file=sys.stderr)
        return 2
    report = run(args.suite, cfg)
    text = render_json(report)
    if args.json_path:
        try:
            with open(args.json_path, "w", encoding="utf-8") as handle:
                handle.write(text)
        except OSError as exc:
            print(f"verify: cannot write report: {exc}", file=sys.stderr)
            return 2
    sys.stdout.write(render_text(report))
    return 1 if report.failed else 0


if __name__ == "__main__":
    sys.exit(main())
