"""``locus run script.lr`` and ``locus repl``."""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional

from ..invariants import DEFAULT_CAP
from .interp import EvalError, Interpreter
from .parser import ParseError, parse_script

EXIT_OK, EXIT_PARSE, EXIT_EVAL = 0, 1, 2


def _add_options(p: argparse.ArgumentParser):
    p.add_argument("--prime", type=int, default=32003, help="characteristic used by kk[...] rings (default 32003)")
    p.add_argument("--cap", type=int, default=DEFAULT_CAP, help="iteration cap for length computations")
    p.add_argument("--order", choices=["grevlex", "lex", "glex"], default="grevlex",
                   help="monomial order for rings that do not name one")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="locus", description="Resolutions, length and Hilbert-Samuel values over local rings.")
    sub = p.add_subparsers(dest="command", required=True)
    run = sub.add_parser("run", help="run a script file")
    run.add_argument("script", help="path to a .lr script, or - for stdin")
    run.add_argument("--json", action="store_true", help="emit one JSON record per statement")
    _add_options(run)
    repl = sub.add_parser("repl", help="interactive session")
    _add_options(repl)
    return p


def _interpreter(args) -> Interpreter:
    if args.cap <= 0:
        raise ValueError("--cap must be positive")
    return Interpreter(prime=args.prime, cap=args.cap, order=args.order)


def cmd_run(args, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        if args.script == "-":
            text = sys.stdin.read()
        else:
            with open(args.script, encoding="utf-8") as fh:
                text = fh.read()
    except OSError as e:
        print(f"locus: cannot read {args.script}: {e.strerror}", file=err)
        return EXIT_EVAL
    try:
        script = parse_script(text)
    except ParseError as e:
        print(f"syntax error: {e}", file=err)
        return EXIT_PARSE
    try:
        it = _interpreter(args)
    except ValueError as e:
        print(f"locus: {e}", file=err)
        return EXIT_EVAL
    try:
        for outcome in it.run(script):
            if args.json:
                out.write(json.dumps(outcome.record(), sort_keys=True) + "\n")
            elif outcome.text is not None:
                out.write(outcome.text + "\n")
    except EvalError as e:
        out.flush()
        print(f"error: {e}", file=err)
        return EXIT_EVAL
    return EXIT_OK


def _balanced(text: str) -> bool:
    depth = 0
    quoted = False
    for line in text.splitlines():
        i = 0
        while i < len(line):
            c = line[i]
            if c == '"':
                quoted = not quoted
            elif not quoted:
                if line.startswith("--", i):
                    break
                if c in "([{":
                    depth += 1
                elif c in ")]}":
                    depth -= 1
            i += 1
    return depth <= 0 and not quoted


def cmd_repl(args, inp=None, out=None) -> int:
    inp = inp or sys.stdin
    out = out or sys.stdout
    try:
        it = _interpreter(args)
    except ValueError as e:
        print(f"locus: {e}", file=sys.stderr)
        return EXIT_EVAL
    buf = ""
    interactive = inp.isatty()
    while True:
        if interactive:
            out.write("... " if buf else "locus> ")
            out.flush()
        line = inp.readline()
        if not line:
            break
        buf += line
        if not _balanced(buf):
            continue
        text, buf = buf, ""
        if not text.strip():
            continue
        try:
            script = parse_script(text)
            for outcome in it.run(script):
                if outcome.text is not None:
                    out.write(outcome.text + "\n")
        except ParseError as e:
            out.write(f"syntax error: {e}\n")
        except EvalError as e:
            out.write(f"error: {e}\n")
    return EXIT_OK


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "run":
        return cmd_run(args)
    return cmd_repl(args)


if __name__ == "__main__":
    sys.exit(main())
