"""Command-line front end: ``mimc parse|explore|check|import|prop1``.

Machine-readable output goes to standard output as JSON (or DOT for
``explore --format dot``); diagnostics go to standard error.  Exit status is
0 on success, 1 on bad input and 2 when a consistency check fails.
"""
from __future__ import annotations

import argparse
import json
import os
import sys

from .consistency import Inconsistent, check_semantic, check_strong, check_weak, proposition1_harness
from .diagram import DiagramError, DiagramSpec, compile_table, instantiate
from .semantics import DEFAULT_DEPTH, DEFAULT_MAX_STATES, explore
from .syntax import ParseError, parse_process, print_process
from .terms import TermError

EXIT_OK, EXIT_INPUT, EXIT_INCONSISTENT = 0, 1, 2


def _color(stream) -> bool:
    return os.environ.get("MIMC_COLOR", "1") != "0" and stream.isatty()


def _diag(kind: str, message: str, color: str):
    head = f"{kind}:"
    if _color(sys.stderr):
        head = f"\033[{color}m{head}\033[0m"
    print(f"{head} {message}", file=sys.stderr)


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as f:
        return f.read()


def _nonneg(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError("must be >= 0")
    return v


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return v


def _emit_json(obj):
    print(json.dumps(obj, indent=2))


def cmd_parse(args) -> int:
    print(print_process(parse_process(_read(args.input))))
    return EXIT_OK


def cmd_explore(args) -> int:
    lts = explore(parse_process(_read(args.input)), args.depth, args.max_states)
    if args.format == "json":
        _emit_json(lts.to_json())
    elif args.format == "dot":
        sys.stdout.write(lts.to_dot())
    else:
        for i, s in enumerate(lts.states):
            print(f"s{i} [depth {lts.depths[i]}] {print_process(s)}")
        for s, a, t in lts.edges:
            print(f"s{s} --{a}--> s{t}")
    if lts.truncated:
        _diag(
            "warning",
            f"exploration truncated (depth {args.depth}, max states {args.max_states}); "
            f"complete up to depth {lts.complete_depth}",
            "33",
        )
    return EXIT_OK


def cmd_check(args) -> int:
    p = parse_process(_read(args.input))
    if args.mode == "weak":
        verdict = check_weak(p)
    elif args.mode == "strong":
        verdict = check_strong(p)
    else:
        verdict = check_semantic(p, args.depth, args.max_states)
    _emit_json(verdict.to_json())
    return EXIT_INCONSISTENT if isinstance(verdict, Inconsistent) else EXIT_OK


def cmd_import(args) -> int:
    spec = DiagramSpec.loads(_read(args.input))
    table = compile_table(spec)
    term = instantiate(table, spec.counts())
    if args.format == "json":
        _emit_json({"table": table.to_dict(), "term": print_process(term)})
    else:
        print(print_process(term))
    return EXIT_OK


def cmd_prop1(args) -> int:
    report = proposition1_harness(args.seed, args.trials, args.depth, args.max_states)
    _emit_json(report.to_json())
    return EXIT_OK if report.ok else EXIT_INCONSISTENT


class _ArgParser(argparse.ArgumentParser):
    # usage errors are input errors; status 2 is reserved for verdicts
    def error(self, message):
        self.print_usage(sys.stderr)
        _diag("error", message, "31")
        sys.exit(EXIT_INPUT)


def build_parser() -> argparse.ArgumentParser:
    ap = _ArgParser(prog="mimc", description="MIM calculus toolkit")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("parse", help="print the canonical form of a term")
    p.add_argument("input", help="term file, or - for standard input")
    p.set_defaults(run=cmd_parse)

    p = sub.add_parser("explore", help="bounded state-space exploration")
    p.add_argument("input")
    p.add_argument("--depth", type=_nonneg, default=DEFAULT_DEPTH)
    p.add_argument("--max-states", type=_positive, default=DEFAULT_MAX_STATES)
    p.add_argument("--format", choices=("dot", "json", "text"), default="json")
    p.set_defaults(run=cmd_explore)

    p = sub.add_parser("check", help="consistency verdict as JSON")
    p.add_argument("input")
    p.add_argument("--mode", choices=("semantic", "weak", "strong"), default="semantic")
    p.add_argument("--depth", type=_nonneg, default=DEFAULT_DEPTH)
    p.add_argument("--max-states", type=_positive, default=DEFAULT_MAX_STATES)
    p.set_defaults(run=cmd_check)

    p = sub.add_parser("import", help="compile a .mimd.json diagram into a term")
    p.add_argument("input")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(run=cmd_import)

    p = sub.add_parser("prop1", help="random check that syntactic implies semantic consistency")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=_positive, default=200)
    p.add_argument("--depth", type=_nonneg, default=4)
    p.add_argument("--max-states", type=_positive, default=2000)
    p.set_defaults(run=cmd_prop1)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.run(args)
    except (ParseError, DiagramError, TermError) as e:
        _diag("error", str(e), "31")
    except json.JSONDecodeError as e:
        _diag("error", f"invalid JSON: {e}", "31")
    except OSError as e:
        _diag("error", f"{e.filename or args.input}: {e.strerror}", "31")
    return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
