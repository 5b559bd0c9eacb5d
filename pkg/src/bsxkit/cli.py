"""Command-line entry point: ``bsx-kit <command> ...``.

stdout carries data (decimal numbers, parenthesis text, bit strings, CSV), one
result per line; diagnostics go to stderr.  Exit status is 0 on success, 1 on a
domain error and 2 on a usage error.
"""

from __future__ import annotations

import argparse
import csv
import sys
from fractions import Fraction
from pathlib import Path

from bsxkit import bill, bits, dist, numcodec, selftest
from bsxkit.bsx import parse
from bsxkit.catalan import catalan, catalan_pair, lgx
from bsxkit.errors import BsxError, DivergentMoment


def _nat(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a natural number: {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be non-negative: {text}")
    return value


def _positive(text: str) -> int:
    value = _nat(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return value


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a fraction: {text!r}") from None


def _nat_list(text: str) -> list[int]:
    if not text.strip():
        return []
    return [_nat(part.strip()) for part in text.split(",")]


def _grid(text: str) -> tuple[float, float, float]:
    try:
        a, b, step = (float(part) for part in text.split(":"))
    except ValueError:
        raise argparse.ArgumentTypeError("grid must be A:B:STEP") from None
    if step <= 0 or b < a:
        raise argparse.ArgumentTypeError("grid needs A <= B and STEP > 0")
    return a, b, step


def _bits_arg(args: argparse.Namespace) -> str:
    if args.input:
        return bits.unpack_bits(Path(args.input).read_bytes())
    if args.bits is None:
        raise SystemExit("error: give BITS or --input FILE")
    return bits.read_bits(args.bits)


def _emit_bits(args: argparse.Namespace, out: str) -> None:
    if args.output:
        Path(args.output).write_bytes(bits.pack_bits(out))
    else:
        print(out)


def _dist_from_args(args: argparse.Namespace) -> dist.BsxDistribution:
    if args.p0 is not None:
        return dist.make_dist(args.p0)
    return dist.from_z(args.z)


def cmd_encode(args):
    print(numcodec.encode(args.n))


def cmd_decode(args):
    print(numcodec.decode(parse(args.parens)))


def cmd_catalan(args):
    if args.pair:
        c, s = catalan_pair(args.n)
        print(c)
        print(s)
    else:
        print(catalan(args.n))


def cmd_lgx(args):
    print(lgx(args.n))


def cmd_enum(args):
    for b in numcodec.enumerate_size(args.size):
        print(b)


def cmd_unpack(args):
    for item in numcodec.unpack(args.x):
        print(item)


def cmd_pack(args):
    print(numcodec.pack(args.items))


def cmd_codeword(args):
    _emit_bits(args, bits.codeword(args.n))


def cmd_frame(args):
    _emit_bits(args, bits.frame(args.n))


def cmd_uncode(args):
    data = _bits_arg(args)
    if args.mode == "pre":
        print(bits.decode_preorder(data, strict=not args.lenient))
    else:
        print(bits.decode_postorder(data))


def cmd_deframe(args):
    result = bits.deframe(_bits_arg(args))
    for message in result.messages:
        print(message)
    if result.desync_recovered:
        print(f"DesyncRecovered({result.desync_recovered})", file=sys.stderr)


def _fmt(value) -> str:
    if isinstance(value, Fraction):
        return str(value)
    return repr(float(value))


def cmd_dist(args):
    if args.curve:
        a, b, step = args.grid
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(["z", "entropy"])
        for z, h in dist.entropy_curve(a, b, step):
            writer.writerow([repr(z), repr(h)])
        return
    d = _dist_from_args(args)
    rows = [("z", _fmt(d.z)), ("p0", _fmt(d.p0)), ("G", _fmt(d.G))]
    try:
        rows.append(("mean_size", _fmt(dist.mean_size(d))))
    except DivergentMoment:
        rows.append(("mean_size", "divergent"))
    rows.append(("mean_list_len", _fmt(dist.mean_list_len(d))))
    try:
        rows.append(("entropy", _fmt(dist.entropy_size(d).value)))
    except DivergentMoment:
        rows.append(("entropy", "divergent"))
    try:
        rows.append(("mean_value", _fmt(dist.mean_value(d).value)))
    except DivergentMoment:
        rows.append(("mean_value", "divergent"))
    rows.append(("kraft_partial", _fmt(dist.kraft_sigma_partial(args.kraft_k))))
    for key, value in rows:
        print(f"{key}={value}")


def cmd_sample(args):
    d = _dist_from_args(args)
    cfg = dist.SampleConfig(seed=args.seed, count=args.count, max_size=args.max_size)
    for x in dist.sample(d, cfg):
        print(x)


def _limits(args) -> bill.EvalLimits:
    return bill.EvalLimits(fuel=args.fuel, depth=args.depth)


def cmd_bill_run(args):
    source = Path(args.file).read_text()
    sink = bill.OutputSink(stream=sys.stdout, fmt=args.out_format)
    ev = bill.Evaluator(_limits(args), sink)
    for expr in bill.read_program(source):
        value = ev.eval(expr)
        print(numcodec.decode(value) if args.out_format == "decimal" else value, flush=True)


def cmd_bill_repl(args):
    bill.repl(sys.stdin, sys.stdout, _limits(args))


def cmd_bill_godel(args):
    print(bill.godel_apply(args.x, args.args, _limits(args)))


def cmd_selftest(args):
    if not selftest.run(deep=args.deep):
        return 1
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bsx-kit", description="Natural numbers as nested parentheses."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("encode", help="bsx numbered N")
    p.add_argument("n", type=_nat)
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("decode", help="number of a bsx")
    p.add_argument("parens")
    p.set_defaults(func=cmd_decode)

    p = sub.add_parser("catalan", help="C_N (and S_N with --pair)")
    p.add_argument("n", type=_nat)
    p.add_argument("--pair", action="store_true", help="print C_N then S_N")
    p.set_defaults(func=cmd_catalan)

    p = sub.add_parser("lgx", help="numeric size of N")
    p.add_argument("n", type=_nat)
    p.set_defaults(func=cmd_lgx)

    p = sub.add_parser("enum", help="every bsx of a size, in numeric order")
    p.add_argument("--size", type=_nat, required=True)
    p.set_defaults(func=cmd_enum)

    p = sub.add_parser("unpack", help="items of X as numbers")
    p.add_argument("x", type=_nat)
    p.set_defaults(func=cmd_unpack)

    p = sub.add_parser("pack", help="number of the list of comma-separated items")
    p.add_argument("items", type=_nat_list)
    p.set_defaults(func=cmd_pack)

    for name, func, text in (("codeword", cmd_codeword, "prefix-free codeword"), ("frame", cmd_frame, "framed message")):
        p = sub.add_parser(name, help=f"{text} for N")
        p.add_argument("n", type=_nat)
        p.add_argument("--output", metavar="FILE", help="write the packed binary format")
        p.set_defaults(func=func)

    p = sub.add_parser("uncode", help="decode a codeword")
    p.add_argument("bits", nargs="?")
    p.add_argument("--input", metavar="FILE", help="read the packed binary format")
    p.add_argument("--mode", choices=("pre", "post"), default="pre")
    strictness = p.add_mutually_exclusive_group()
    strictness.add_argument("--strict", dest="lenient", action="store_false")
    strictness.add_argument("--lenient", dest="lenient", action="store_true")
    p.set_defaults(func=cmd_uncode, lenient=False)

    p = sub.add_parser("deframe", help="messages in a framed bit stream")
    p.add_argument("bits", nargs="?")
    p.add_argument("--input", metavar="FILE", help="read the packed binary format")
    p.set_defaults(func=cmd_deframe)

    for name, func in (("dist", cmd_dist), ("sample", cmd_sample)):
        p = sub.add_parser(name)
        param = p.add_mutually_exclusive_group(required=name == "sample")
        param.add_argument("--p0", type=_fraction, help="exact p0 as P/Q")
        param.add_argument("--z", type=float, help="floating-point z")
        p.set_defaults(func=func)
        if name == "dist":
            p.add_argument("--report", action="store_true", help="key=value report (default)")
            p.add_argument("--curve", choices=("entropy",))
            p.add_argument("--grid", type=_grid, default=(0.01, 0.24, 0.01))
            p.add_argument("--kraft-k", type=_nat, default=100)
        else:
            p.add_argument("--count", type=_positive, default=1)
            p.add_argument("--seed", type=int, default=None)
            p.add_argument("--max-size", type=_nat, default=10_000)

    p = sub.add_parser("bill", help="the BILL interpreter")
    bill_sub = p.add_subparsers(dest="bill_command", required=True)
    for name, func in (("run", cmd_bill_run), ("repl", cmd_bill_repl), ("godel", cmd_bill_godel)):
        q = bill_sub.add_parser(name)
        q.add_argument("--fuel", type=_positive, default=bill.EvalLimits.fuel)
        q.add_argument("--depth", type=_positive, default=bill.EvalLimits.depth)
        q.set_defaults(func=func)
        if name == "run":
            q.add_argument("file")
            q.add_argument("--out-format", choices=("parens", "decimal"), default="parens")
        elif name == "godel":
            q.add_argument("--x", type=_nat, required=True)
            q.add_argument("--args", type=_nat_list, default=[])

    p = sub.add_parser("selftest", help="exhaustive small-size oracles")
    p.add_argument("--deep", action="store_true", help="sizes up to 10 instead of 8")
    p.set_defaults(func=cmd_selftest)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "dist" and not args.curve and args.p0 is None and args.z is None:
        parser.error("dist needs --p0 or --z unless --curve is given")
    if args.command == "dist" and args.curve and (args.p0 is not None or args.z is not None):
        parser.error("--curve sweeps z itself; drop --p0/--z")
    try:
        return args.func(args) or 0
    except BsxError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
