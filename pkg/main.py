import argparse
import sys

from src.orchestration import run
from src.reporting import canonical_json

COMMANDS = ["validate", "radical", "gpar", "check", "kernel", "compare", "capelli-audit", "kemer",
            "witness-simple", "zr-audit", "theorem-j", "property-k", "transfer", "kemer-product"]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gradedpi",
        description="Exact graded polynomial identities and Kemer point estimates.")
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("--spec", action="append", required=True, help="JSON spec file (repeatable)")
    parser.add_argument("--algebra", action="append", help="algebra name (repeatable for compare/kemer-product)")
    parser.add_argument("--poly", help="polynomial name")
    parser.add_argument("--group", help="group name for transfer")
    parser.add_argument("--profile", help="comma-separated degree labels for kernel")
    parser.add_argument("--max-degree", dest="max_degree", type=int)
    parser.add_argument("--nu", type=int)
    parser.add_argument("--border-budget", dest="border_budget", type=int)
    parser.add_argument("--workers", type=int)
    parser.add_argument("--budget", type=int, help="assignment or search-node budget")
    parser.add_argument("--alternating", help="comma-separated variable ids")
    parser.add_argument("--assign", action="append", help="var=basis-label for theorem-j")
    parser.add_argument("--trials", type=int)
    parser.add_argument("--seed", type=int)
    parser.add_argument("--family", choices=["plain", "symmetrized"])
    parser.add_argument("--borders", type=int)
    parser.add_argument("--n", type=int, help="number of alternating variables for zr-audit")
    return parser


def main(argv=None) -> int:
    """Run one command and print its canonical JSON report"""
    args = build_parser().parse_args(argv)
    code, report = run(args.command, args)
    sys.stdout.write(canonical_json(report))
    return code


if __name__ == "__main__":
    sys.exit(main())
