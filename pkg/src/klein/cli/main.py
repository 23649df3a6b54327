"""``klein`` command line.

Exit codes: 0 success, 1 usage error, 2 domain error, 3 expression syntax error.
"""

from __future__ import annotations

import argparse
import contextlib
import json
import sys

from ..algebra import format_real
from ..errors import ExpressionSyntaxError, KleinError
from ..geometry import SPACES, Space, angle, classify, distance
from ..transforms import IsometryParams, make_isometry, sandwich
from .evaluate import evaluate, parse_blade
from .parser import parse
from .svg import PlotSpec, render_svg

EXIT_OK, EXIT_USAGE, EXIT_DOMAIN, EXIT_SYNTAX = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _space(name: str) -> Space:
    try:
        return Space.from_name(name)
    except (KeyError, ValueError):
        raise argparse.ArgumentTypeError(f"unknown space {name!r}; choose from {', '.join(SPACES)}") from None


def _precision(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"precision must be an integer, got {text!r}") from None
    if not 1 <= n <= 17:
        raise argparse.ArgumentTypeError("precision must be between 1 and 17")
    return n


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--space", type=_space, help=f"one of {', '.join(SPACES)}")
    common.add_argument("--json", action="store_true", help="JSON output; blade arguments may be JSON")
    common.add_argument("--precision", type=_precision, default=12, help="significant digits (default 12)")

    top = _Parser(prog="klein", description="Points, lines and isometries of the six Cayley-Klein planes.")
    sub = top.add_subparsers(dest="command", parser_class=_Parser, required=True)

    p = sub.add_parser("eval", parents=[common], help="evaluate a multivector expression")
    p.add_argument("expression")
    p = sub.add_parser("distance", parents=[common], help="distance between two points")
    p.add_argument("p")
    p.add_argument("q")
    p = sub.add_parser("angle", parents=[common], help="angle between two lines")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--signed", action="store_true", help="keep the sign of the cosine")
    p = sub.add_parser("classify", parents=[common], help="proper, improper or null")
    p.add_argument("blade")
    p = sub.add_parser("transform", parents=[common], help="apply an isometry to a blade")
    p.add_argument("isometry", help='JSON such as {"kind": "rotation", "center": [1, 0, 0], "amount": 1.57}')
    p.add_argument("blade")
    p = sub.add_parser("plot", parents=[common], help="render a plot spec (JSON text or @file) to SVG")
    p.add_argument("spec")
    return top


def _need_space(args) -> Space:
    if args.space is None:
        raise UsageError(f"klein {args.command}: --space is required")
    return args.space


def _emit_real(value: float, key: str, args, out):
    if args.json:
        out.write(json.dumps({key: float(format_real(value, args.precision))}) + "\n")
    else:
        out.write(format_real(value, args.precision) + "\n")


def _emit_mv(value, args, out):
    if args.json:
        out.write(json.dumps(value.to_json(args.precision)) + "\n")
    else:
        out.write(value.to_text(args.precision) + "\n")


def _load_json(text: str):
    if text.startswith("@"):
        with open(text[1:], encoding="utf-8") as fh:
            text = fh.read()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"invalid JSON at offset {exc.pos}: {exc.msg}") from None


def _dispatch(args, out):
    cmd = args.command
    if cmd == "plot":
        data = _load_json(args.spec)
        if not isinstance(data, dict):
            raise UsageError("a plot spec is a JSON object")
        try:
            spec = PlotSpec.from_json(data, args.space)
        except (KeyError, TypeError, ValueError) as exc:
            if isinstance(exc, KleinError):
                raise
            raise UsageError(f"invalid plot spec: {exc}") from None
        out.write(render_svg(spec))
        return
    space = _need_space(args)

    def blade(text):
        return parse_blade(text, space, allow_json=args.json)

    if cmd == "eval":
        _emit_mv(evaluate(parse(args.expression), space), args, out)
    elif cmd == "distance":
        _emit_real(distance(blade(args.p), blade(args.q), space), "distance", args, out)
    elif cmd == "angle":
        _emit_real(angle(blade(args.a), blade(args.b), space, signed=args.signed), "angle", args, out)
    elif cmd == "classify":
        result = classify(blade(args.blade), space).value
        out.write((json.dumps({"classification": result}) if args.json else result) + "\n")
    elif cmd == "transform":
        data = _load_json(args.isometry)
        try:
            params = IsometryParams.from_json(data)
        except (KeyError, TypeError, ValueError, AttributeError) as exc:
            if isinstance(exc, KleinError):
                raise
            raise UsageError(f"invalid isometry: {exc}") from None
        _emit_mv(sandwich(make_isometry(params, space), blade(args.blade)), args, out)


def run(argv=None, stdout=None, stderr=None) -> int:
    """Execute the command line ``argv``; returns the exit code instead of exiting."""
    out = stdout if stdout is not None else sys.stdout
    err = stderr if stderr is not None else sys.stderr
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
            args = build_parser().parse_args(argv)
        _dispatch(args, out)
    except UsageError as exc:
        err.write(f"{exc}\n")
        return EXIT_USAGE
    except ExpressionSyntaxError as exc:
        err.write(f"syntax error: {exc}\n")
        return EXIT_SYNTAX
    except KleinError as exc:
        err.write(f"error: {type(exc).__name__}: {exc}\n")
        return EXIT_DOMAIN
    except OSError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    return EXIT_OK


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
