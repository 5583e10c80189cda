"""``tshape`` command line.

Exit status: 0 success, 1 usage or parse error, 2 domain error. Errors are a
single ``error: <kind>: <detail>`` line on stderr.

Compact shapes that begin with ``-`` (``-+``, ``---``) are accepted as
positional arguments; the bare token ``--`` keeps its usual meaning as the
end-of-options marker, so spell that shape ``t^-2``.
"""

from __future__ import annotations

import argparse
import re
import sys
from pathlib import Path

from . import blocks as blk
from .blowup import BlowUpSpec, blow_up, blow_up_depth, is_blow_up_of, peel, random_blow_up
from .calculus import classify, iterate, orbit
from .census import PREDICATES, census_table, find_witnesses, parse_predicate, to_csv
from .core import Shape, format_shape, graph_trace, parse_shape
from .errors import ParseError, ShapeError
from .normalform import random_nf, realize, simplify_all

_DASHED_SHAPE = re.compile(r"-[+-]*")
_MARK = "\x00"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _shape_arg(text: str) -> Shape:
    return parse_shape(text.lstrip(_MARK))


def _build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="tshape", description="Calculus of cyclic t-shapes.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("classify", help="shape classes and provenance labels")
    c.add_argument("shape")
    c.add_argument("--json", action="store_true")

    c = sub.add_parser("derive", help="Magnus derivative")
    c.add_argument("shape")
    g = c.add_mutually_exclusive_group()
    g.add_argument("--steps", type=int, default=1)
    g.add_argument("--orbit", action="store_true")

    c = sub.add_parser("census", help="class counts per width")
    c.add_argument("--max-width", type=int, required=True)
    c.add_argument("--csv", dest="csv_path")
    c.add_argument("--inversion", action="store_true", help="count rotation+inversion classes")
    c.add_argument("--workers", type=int, default=1)

    c = sub.add_parser("blowup", help="m-blow-up of a shape")
    c.add_argument("shape")
    c.add_argument("--m", type=int, required=True)
    c.add_argument("--seed", type=int)
    c.add_argument("--max-block-width", type=int)
    c.add_argument("--blocks", dest="blocks_file")
    c.add_argument("--emit-blocks", action="store_true", help="also print the block assignment")

    c = sub.add_parser("peel", help="invert a 1-blow-up")
    c.add_argument("shape")

    c = sub.add_parser("member", help="is U an n-blow-up of T")
    c.add_argument("u")
    c.add_argument("t")
    c.add_argument("--n", type=int)

    c = sub.add_parser("blocks", help="list m-blocks of a width")
    c.add_argument("--m", type=int, required=True)
    c.add_argument("--width", type=int, required=True)
    c.add_argument("--full", action="store_true")

    c = sub.add_parser("nf", help="random normal-form word")
    c.add_argument("shape")
    c.add_argument("--m", type=int, required=True)
    c.add_argument("--seed", type=int, required=True)
    c.add_argument("--max-block-width", type=int)
    c.add_argument("--simplify", action="store_true")

    c = sub.add_parser("graph", help="graph of a shape")
    c.add_argument("shape")
    g = c.add_mutually_exclusive_group()
    g.add_argument("--csv", dest="csv_path")
    g.add_argument("--svg", dest="svg_path")

    c = sub.add_parser("witnesses", help="necklaces satisfying a predicate")
    c.add_argument("--max-width", type=int, required=True)
    c.add_argument(
        "--predicate",
        default="amenable_not_cg",
        help=f"'&'-joined atoms, '!' negates; atoms: {', '.join(PREDICATES)}",
    )
    c.add_argument("--runs", action="store_true", help="print shapes in run notation")

    sub.choices["derive"].add_argument("--runs", action="store_true", help="print shapes in run notation")
    return p


_parser = None


def _get_parser():
    global _parser
    if _parser is None:
        _parser = _build_parser()
    return _parser


def _fmt(s: Shape, args) -> str:
    return format_shape(s, "runs" if getattr(args, "runs", False) else "compact")


def _classify(args, out):
    c = classify(_shape_arg(args.shape))
    if args.json:
        out.append(c.to_json())
        return
    for key, value in c.as_dict().items():
        if isinstance(value, bool):
            value = str(value).lower()
        elif isinstance(value, list):
            value = ",".join(value) or "-"
        out.append(f"{key}: {value}")


def _derive(args, out):
    t = _shape_arg(args.shape)
    if args.orbit:
        out.extend(_fmt(s, args) for s in orbit(t))
    else:
        if args.steps < 0:
            raise UsageError("--steps must be non-negative")
        out.append(_fmt(iterate(t, args.steps), args))


def _census(args, out):
    if args.max_width < 1:
        raise UsageError("--max-width must be at least 1")
    text = to_csv(census_table(args.max_width, workers=args.workers, inversion=args.inversion))
    if args.csv_path:
        Path(args.csv_path).write_text(text, newline="\n")
    else:
        out.append(text.rstrip("\n"))


def _blowup(args, out):
    t = _shape_arg(args.shape)
    if args.blocks_file:
        if args.seed is not None:
            raise UsageError("--blocks and --seed are exclusive")
        spec = BlowUpSpec.from_text(Path(args.blocks_file).read_text())
        if spec.base != t or spec.m != args.m:
            raise UsageError("the blocks file's base/m do not match the command line")
        u = blow_up(spec)
    else:
        if args.seed is None or args.max_block_width is None:
            raise UsageError("give --seed and --max-block-width, or --blocks FILE")
        u, spec = random_blow_up(t, args.m, args.max_block_width, args.seed)
    out.append(format_shape(u))
    if args.emit_blocks:
        out.append(spec.to_text().rstrip("\n"))


def _peel(args, out):
    base, gap_blocks = peel(_shape_arg(args.shape))
    out.append(BlowUpSpec(base, 1, tuple(gap_blocks)).to_text().rstrip("\n"))


def _member(args, out):
    u, t = _shape_arg(args.u), _shape_arg(args.t)
    if args.n is not None:
        if args.n < 0:
            raise UsageError("--n must be non-negative")
        out.append(str(is_blow_up_of(u, t, args.n)).lower())
    else:
        n = blow_up_depth(u, t)
        out.append("false" if n is None else str(n))


def _blocks(args, out):
    for b in blk.enumerate_blocks(args.m, args.width, args.full):
        out.append(f"{b} m={b.m} full={str(b.is_full).lower()}")


def _nf(args, out):
    t = _shape_arg(args.shape)
    width = args.max_block_width if args.max_block_width is not None else 2 * args.m + 2
    w = random_nf(t, args.m, width, args.seed)
    out.append(w.to_text().rstrip("\n"))
    out.append(f"realize={format_shape(realize(w))}")
    if args.simplify:
        for k, step in enumerate(simplify_all(w)[1:], 1):
            out.append(f"# step {k}")
            out.append(step.to_text().rstrip("\n"))


def _graph(args, out):
    trace = graph_trace(_shape_arg(args.shape))
    if args.svg_path:
        Path(args.svg_path).write_text(trace.to_svg(), newline="\n")
    elif args.csv_path:
        Path(args.csv_path).write_text(trace.to_csv(), newline="\n")
    else:
        out.append(trace.to_csv().rstrip("\n"))


def _witnesses(args, out):
    try:
        pred = parse_predicate(args.predicate)
    except ValueError as e:
        raise UsageError(str(e)) from None
    out.extend(_fmt(s, args) for s in find_witnesses(args.max_width, pred))


_COMMANDS = {
    "classify": _classify,
    "derive": _derive,
    "census": _census,
    "blowup": _blowup,
    "peel": _peel,
    "member": _member,
    "blocks": _blocks,
    "nf": _nf,
    "graph": _graph,
    "witnesses": _witnesses,
}


def _protect(argv):
    return [_MARK + a if a != "--" and _DASHED_SHAPE.fullmatch(a) else a for a in argv]


def run(argv, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    out: list[str] = []
    try:
        args = _get_parser().parse_args(_protect(argv))
        _COMMANDS[args.command](args, out)
    except UsageError as e:
        print(f"error: usage: {e}", file=stderr)
        return 1
    except ParseError as e:
        print(f"error: parse: {e}", file=stderr)
        return 1
    except ShapeError as e:
        print(f"error: {e.kind}: {e}", file=stderr)
        return 2
    except OSError as e:
        print(f"error: io: {e}", file=stderr)
        return 1
    except SystemExit as e:  # --help
        return int(e.code or 0)
    if out:
        stdout.write("\n".join(out) + "\n")
    return 0


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
