"""Command line: ``pfisterlink run <scenario>`` and ``pfisterlink file <scenario.json>``."""

from __future__ import annotations

import argparse
import json
import re
import sys
from pathlib import Path
from typing import List, Sequence

from .scenarios import SCENARIOS, Config, Report, UnknownScenario, run, run_file


def _field(text: str) -> int:
    m = re.fullmatch(r"\s*2\^(\d+)\s*", text)
    if m:
        k = int(m.group(1))
    elif text.isdigit() and int(text) > 1 and int(text) & (int(text) - 1) == 0:
        k = int(text).bit_length() - 1
    else:
        raise argparse.ArgumentTypeError(f"expected 2^k or a power of two, got {text!r}")
    if not 1 <= k <= 16:
        raise argparse.ArgumentTypeError("k must be in 1..16")
    return k


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be positive")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="pfisterlink", description="Linkage and tightness of quadratic Pfister forms in characteristic 2.")
    sub = p.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", type=_field, default=4, metavar="2^k", help="finite field for sampling (default 2^4)")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--trials", type=_positive, default=200)
    common.add_argument("--degree-bound", type=int, default=2, choices=range(0, 4), metavar="{0..3}")
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--out", type=Path, help="write the report here instead of stdout")

    r = sub.add_parser("run", parents=[common], help="run a built-in scenario")
    r.add_argument("scenario", choices=sorted(SCENARIOS))
    r.add_argument("--n", type=int, default=2)
    r.add_argument("--s", type=int, default=2)

    f = sub.add_parser("file", parents=[common], help="run a scenario described in a JSON file")
    f.add_argument("path", type=Path)

    sub.add_parser("list", help="list the built-in scenarios")
    return p


def _check_ranges(args: argparse.Namespace, parser: argparse.ArgumentParser) -> None:
    if args.command != "run":
        return
    if args.scenario == "main8" and not 2 <= args.n <= 6:
        parser.error("main8 needs 2 <= n <= 6")
    if args.scenario == "counter36" and (args.n < 2 or args.s < 1 or args.n + args.s > 8):
        parser.error("counter36 needs n >= 2, s >= 1 and n + s <= 8")
    if args.scenario == "updim" and not 1 <= args.s <= 5:
        parser.error("updim needs 1 <= s <= 5")
    if args.scenario == "multiadd" and not 2 <= args.n <= 5:
        parser.error("multiadd needs 2 <= n <= 5")


def emit(report: Report, fmt: str) -> str:
    return report.to_json() + "\n" if fmt == "json" else report.to_text() + "\n"


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "list":
        print("\n".join(sorted(SCENARIOS)))
        return 0
    _check_ranges(args, parser)
    cfg = Config(
        n=getattr(args, "n", 2), s=getattr(args, "s", 2), field_k=args.field, seed=args.seed,
        trials=args.trials, degree_bound=args.degree_bound,
    )
    try:
        if args.command == "run":
            report = run(args.scenario, cfg)
        else:
            report = run_file(json.loads(args.path.read_text()), cfg)
    except (UnknownScenario, ValueError, SyntaxError, KeyError, OSError) as e:
        print(f"pfisterlink: error: {e}", file=sys.stderr)
        return 2
    text = emit(report, args.format)
    if args.out:
        args.out.write_text(text)
    else:
        sys.stdout.write(text)
    return 0 if report.ok else 1


if __name__ == "__main__":
    sys.exit(main())
