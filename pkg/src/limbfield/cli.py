"""Command line entry point: ``limbfield {bench,list-fields,selftest}``.

Exit codes: 0 success, 1 selftest failure, 2 usage or configuration error.
"""

from __future__ import annotations

import argparse
import itertools
import random
import sys

from . import bench, catalog
from . import binfield as B
from . import oracle as O
from . import primefield as P
from .errors import BenchConfigError, FieldValidationError, SpecParseError, UnknownFieldError
from .words import WORD_SIZES


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # one-line diagnostics instead of argparse's usage dump
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="limbfield", description="Binary and prime field arithmetic on L-bit words.")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    b = sub.add_parser("bench", help="time field operations")
    b.add_argument("--family", choices=["binary", "prime", "both"], default="both")
    b.add_argument("--size", type=int, action="append", dest="sizes",
                   help="field size (t or n bits); repeatable, default all catalog sizes")
    b.add_argument("--op", action="append", dest="ops", choices=bench.OPS,
                   help="operation; repeatable, default mul and inv")
    b.add_argument("--iters", type=int, default=1000)
    b.add_argument("--repeats", type=int, default=1, help="keep the median of N timed loops")
    b.add_argument("--word-bits", type=int, default=16, choices=WORD_SIZES)
    b.add_argument("--seed", type=int, default=0)
    b.add_argument("--format", choices=["csv", "table"], default="csv")
    b.add_argument("--strict-emulation", action="store_true")
    b.add_argument("--custom-poly", metavar="SPEC", help='binary field as "t:e_k,...,0"')
    b.add_argument("--no-reference", action="store_true",
                   help="omit reference timings and run metadata")
    b.add_argument("--dump-operands", metavar="PATH", help="write hex operands to PATH")

    sub.add_parser("list-fields", help="print the field catalog")

    s = sub.add_parser("selftest", help="check arithmetic against the naive oracle")
    s.add_argument("--word-bits", type=int, default=16, choices=WORD_SIZES)
    s.add_argument("--pairs", type=int, default=25)
    s.add_argument("--seed", type=int, default=2024)
    s.add_argument("--strict-emulation", action="store_true")
    return parser


def _cmd_bench(args, out, err) -> int:
    config = bench.BenchConfig(
        family=args.family, sizes=args.sizes, ops=args.ops or ["mul", "inv"],
        iters=args.iters, word_bits=args.word_bits, seed=args.seed, format=args.format,
        strict_emulation=args.strict_emulation, custom_poly=args.custom_poly,
        repeats=args.repeats)
    config.validate()
    for fam, size, params in bench.resolve_fields(config):
        warning = getattr(params, "warning", None)
        if warning:
            print(f"limbfield: warning: {warning} ({catalog.render_poly_spec(params)})", file=err)
    if args.dump_operands:
        with open(args.dump_operands, "w") as dump:
            report = bench.run_bench(config, dump)
    else:
        report = bench.run_bench(config)
    out.write(bench.emit_report(report, config.format, reference=not args.no_reference))
    return 0


def _cmd_list(out) -> int:
    for desc in catalog.list_fields():
        out.write(desc.describe() + "\n")
    return 0


def _selftest_suites(word_bits: int, pairs: int, seed: int, strict: bool):
    """Yield (name, ok) for each check suite."""
    rng = random.Random(seed)

    small = B.BinaryFieldParams(3, (0, 1), word_bits, strict)
    pb = O.bits_from_int(small.modulus)
    elems = [small(v) for v in range(8)]
    ok = all(int(a * b) == O.int_from_bits(O.oracle_gf_mulmod(
        O.bits_from_int(int(a)), O.bits_from_int(int(b)), pb))
        for a, b in itertools.product(elems, elems))
    ok &= all(a * a.inverse() == small.one() for a in elems[1:])
    yield "GF(2^3) exhaustive", ok

    for t in catalog.BINARY_POLYS:
        f = catalog.binary_field(t, word_bits, strict)
        pb = O.bits_from_int(f.modulus)
        ok = True
        for _ in range(pairs):
            a, b = f.random(rng), f.random(rng, nonzero=True)
            ref = O.int_from_bits(O.oracle_gf_mulmod(O.bits_from_int(int(a)),
                                                     O.bits_from_int(int(b)), pb))
            ok &= int(a * b) == ref
            ok &= B.gf_square(a) == a * a
            ok &= b * b.inverse() == f.one()
            ok &= (a + b) * (a + b) == a * a + b * b
        yield f"binary {t}", ok

    for n in catalog.PRIMES:
        f = catalog.prime_field(n, word_bits, strict)
        p = f.modulus
        ok = True
        for _ in range(pairs):
            a, b = f.random(rng), f.random(rng, nonzero=True)
            x, y = int(a), int(b)
            ok &= int(a + b) == O.oracle_fp_arith("add", x, y, p)
            ok &= int(a - b) == O.oracle_fp_arith("sub", x, y, p)
            ok &= int(a * b) == O.oracle_fp_arith("mul", x, y, p)
            ok &= int(b.inverse()) == O.oracle_fp_arith("inv", y, None, p)
        yield f"prime {n}", ok

    f = P.PrimeFieldParams(7, 127, 8, strict)
    ok = all(int(f(x) * f(y)) == O.oracle_fp_arith("mul", x, y, 127)
             for x in range(127) for y in range(127))
    yield "p=127 exhaustive", ok


def _cmd_selftest(args, out) -> int:
    failed = 0
    for name, ok in _selftest_suites(args.word_bits, args.pairs, args.seed, args.strict_emulation):
        out.write(f"{'PASS' if ok else 'FAIL'}  {name}\n")
        failed += not ok
    out.write("selftest passed\n" if not failed else f"selftest: {failed} suite(s) failed\n")
    return 1 if failed else 0


def cli_main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command == "bench":
            return _cmd_bench(args, out, err)
        if args.command == "list-fields":
            return _cmd_list(out)
        return _cmd_selftest(args, out)
    except (UsageError, BenchConfigError, UnknownFieldError, SpecParseError,
            FieldValidationError) as exc:
        print(f"limbfield: error: {exc}", file=err)
        return 2


def main():
    sys.exit(cli_main())
