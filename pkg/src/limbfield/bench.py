"""Timing harness for field operations.

Operands are drawn before timing from ``random.Random`` (Mersenne Twister)
seeded with the string ``"{seed}/{family}/{size}/{op}"``; string seeds go
through SHA-512, so operand streams are stable across runs and platforms.
Each (family, size, op) is timed as one loop over all operand pairs with
``time.perf_counter_ns``, and the loop result is folded into a sink so
no call can be skipped.  With ``repeats > 1`` the median loop time is kept.
"""

from __future__ import annotations

import io
import platform
import random
import statistics
import time
from dataclasses import dataclass, field

from . import binfield as B
from . import catalog
from . import primefield as P
from .errors import BenchConfigError, ContractError, UnknownFieldError

OPS = ("add", "sq", "mul", "inv", "div")
FAMILIES = ("binary", "prime")
CSV_HEADER = "family,size,word_bits,op,iters,total_ns,ns_per_op"

_BINARY_OPS = {
    "add": lambda x, y: B.gf_add(x, y),
    "sq": lambda x, y: B.gf_square(x),
    "mul": lambda x, y: B.gf_mul(x, y),
    "inv": lambda x, y: B.gf_inv(x),
    "div": lambda x, y: B.gf_div(x, y),
}

# the prime track has no dedicated squaring; sq is a self-product
_PRIME_OPS = {
    "add": lambda x, y: P.fp_add(x, y),
    "sq": lambda x, y: P.fp_mul(x, x),
    "mul": lambda x, y: P.fp_mul(x, y),
    "inv": lambda x, y: P.fp_inv(x),
    "div": lambda x, y: P.fp_div(x, y),
}


@dataclass
class BenchConfig:
    family: str = "both"
    sizes: list[int] | None = None
    ops: list[str] = field(default_factory=lambda: ["mul", "inv"])
    iters: int = 1000
    word_bits: int = 16
    seed: int = 0
    format: str = "csv"
    strict_emulation: bool = False
    custom_poly: str | None = None
    repeats: int = 1

    def validate(self):
        if self.family not in FAMILIES + ("both",):
            raise BenchConfigError(f"unknown family {self.family!r}")
        if self.iters < 1:
            raise BenchConfigError("iters must be >= 1")
        if self.repeats < 1:
            raise BenchConfigError("repeats must be >= 1")
        if not self.ops:
            raise BenchConfigError("at least one op is required")
        bad = [op for op in self.ops if op not in OPS]
        if bad:
            raise BenchConfigError(f"unknown op(s) {bad}; choose from {list(OPS)}")
        if self.sizes is not None and not self.sizes:
            raise BenchConfigError("sizes must be nonempty")
        if self.format not in ("csv", "table"):
            raise BenchConfigError(f"unknown format {self.format!r}")
        if self.custom_poly and self.family == "prime":
            raise BenchConfigError("--custom-poly needs the binary family")


@dataclass(frozen=True)
class BenchRow:
    family: str
    size: int
    word_bits: int
    op: str
    iters: int
    total_ns: int

    @property
    def ns_per_op(self) -> float:
        return self.total_ns / self.iters


@dataclass
class BenchReport:
    rows: list[BenchRow]
    metadata: dict = field(default_factory=dict)

    def row(self, family: str, size: int, op: str) -> BenchRow:
        for r in self.rows:
            if (r.family, r.size, r.op) == (family, size, op):
                return r
        raise KeyError((family, size, op))

    def ratio(self, family: str, size: int, num: str = "inv", den: str = "mul") -> float:
        return self.row(family, size, num).ns_per_op / self.row(family, size, den).ns_per_op


def resolve_fields(config: BenchConfig) -> list[tuple[str, int, object]]:
    """Field parameters to benchmark, in report order."""
    L, strict = config.word_bits, config.strict_emulation
    families = FAMILIES if config.family == "both" else (config.family,)
    wanted = None if config.sizes is None else list(dict.fromkeys(config.sizes))
    out = []
    if config.custom_poly:
        f = catalog.parse_poly_spec(config.custom_poly, L, strict)
        out.append(("binary", f.t, f))
        if wanted is not None:
            wanted = [s for s in wanted if s != f.t]
    for fam in families:
        table = catalog.BINARY_POLYS if fam == "binary" else catalog.PRIMES
        if wanted is None:
            sizes = [] if (config.custom_poly and fam == "binary") else sorted(table)
        else:
            sizes = sorted(s for s in wanted if s in table)
        for s in sizes:
            make = catalog.binary_field if fam == "binary" else catalog.prime_field
            out.append((fam, s, make(s, L, strict)))
    if wanted is not None:
        known = {s for fam, s, _ in out}
        missing = [s for s in wanted if s not in known]
        if missing:
            raise UnknownFieldError(
                f"no catalog {config.family} field of size {missing[0]} "
                f"(binary: {sorted(catalog.BINARY_POLYS)}, prime: {sorted(catalog.PRIMES)})")
    return out


def make_operands(family: str, params, op: str, iters: int, seed: int) -> list[tuple]:
    rng = random.Random(f"{seed}/{family}/{_size_of(params)}/{op}")
    nonzero_a = op == "inv"
    nonzero_b = op == "div"
    return [(params.random(rng, nonzero_a), params.random(rng, nonzero_b)) for _ in range(iters)]


def _size_of(params) -> int:
    return params.t if isinstance(params, B.BinaryFieldParams) else params.n


def _time_loop(fn, pairs) -> tuple[int, int]:
    sink = 0
    start = time.perf_counter_ns()
    for x, y in pairs:
        sink ^= fn(x, y).words[0]
    return time.perf_counter_ns() - start, sink


def run_bench(config: BenchConfig, dump=None) -> BenchReport:
    """Time every requested (family, size, op); single-threaded.

    ``dump`` may be a text stream receiving the hex operands, one pair per line.
    """
    config.validate()
    fields = resolve_fields(config)
    ops = [op for op in OPS if op in config.ops]
    rows = []
    sink = 0
    for fam, size, params in fields:
        table = _BINARY_OPS if fam == "binary" else _PRIME_OPS
        for op in ops:
            pairs = make_operands(fam, params, op, config.iters, config.seed)
            if dump is not None:
                for k, (x, y) in enumerate(pairs):
                    dump.write(f"{fam},{size},{op},{k},{x.hex()},{y.hex()}\n")
            samples = []
            for _ in range(config.repeats):
                elapsed, s = _time_loop(table[op], pairs)
                samples.append(elapsed)
                sink ^= s
            rows.append(BenchRow(fam, size, config.word_bits, op, config.iters,
                                 int(statistics.median_low(samples))))
    meta = {
        "seed": config.seed,
        "strict_emulation": config.strict_emulation,
        "repeats": config.repeats,
        "host": f"{platform.python_implementation()} {platform.python_version()} "
                f"on {platform.machine()} {platform.system()}",
        "sink": sink,
    }
    if config.custom_poly:
        meta["custom_poly"] = config.custom_poly
    return BenchReport(rows, meta)


def _reference_lines(report: BenchReport) -> list[str]:
    lines = []
    seen = []
    for r in report.rows:
        key = (r.family, r.size)
        ref = catalog.PAPER_TIMINGS_MS.get(key)
        if ref and key not in seen:
            seen.append(key)
            vals = " ".join(f"{op}={ms}ms" for op, ms in ref.items())
            lines.append(f"# reference ATmega168 16MHz {r.family} {r.size}: {vals}")
    return lines


def emit_report(report: BenchReport, fmt: str = "csv", reference: bool = False) -> str:
    """Render as CSV or as a Tables 1-2 style grid (sizes across, ops down).

    With ``reference`` the published ATmega168 timings are added as
    ``#`` comment lines; they are context only.
    """
    if not report.rows:
        raise ContractError("cannot emit an empty report")
    rows = sorted(report.rows, key=lambda r: (FAMILIES.index(r.family), r.size, OPS.index(r.op)))
    buf = io.StringIO()
    if fmt == "csv":
        buf.write(CSV_HEADER + "\n")
        for r in rows:
            buf.write(f"{r.family},{r.size},{r.word_bits},{r.op},{r.iters},"
                      f"{r.total_ns},{r.ns_per_op:.1f}\n")
        if reference:
            meta = " ".join(f"{k}={v}" for k, v in report.metadata.items() if k != "sink")
            buf.write(f"# {meta}\n")
            for line in _reference_lines(report):
                buf.write(line + "\n")
        return buf.getvalue()
    if fmt != "table":
        raise ContractError(f"unknown format {fmt!r}")
    blocks = []
    for fam in FAMILIES:
        fam_rows = [r for r in rows if r.family == fam]
        if not fam_rows:
            continue
        sizes = sorted({r.size for r in fam_rows})
        ops = [op for op in OPS if any(r.op == op for r in fam_rows)]
        label = "Degree of field" if fam == "binary" else "Bits of prime"
        grid = [[label] + [str(s) for s in sizes]]
        for op in ops:
            cells = []
            for s in sizes:
                hit = [r for r in fam_rows if r.size == s and r.op == op]
                cells.append(f"{hit[0].ns_per_op / 1e6:.4f}" if hit else "-")
            grid.append([f"{op} on {fam} fields"] + cells)
        if reference:
            for op in ("mul", "inv"):
                if op in ops:
                    cells = [str(catalog.PAPER_TIMINGS_MS.get((fam, s), {}).get(op, "-"))
                             for s in sizes]
                    grid.append([f"{op}, reference ATmega168"] + cells)
        widths = [max(len(row[c]) for row in grid) for c in range(len(grid[0]))]
        text = [f"Execution times on {fam} fields (ms per op, L={fam_rows[0].word_bits})"]
        for k, row in enumerate(grid):
            text.append(" | ".join(cell.rjust(wd) if c else cell.ljust(wd)
                                   for c, (cell, wd) in enumerate(zip(row, widths))))
            if k == 0:
                text.append("-+-".join("-" * wd for wd in widths))
        blocks.append("\n".join(text))
    return "\n\n".join(blocks) + "\n"


def mask_timing(csv_text: str) -> str:
    """Blank the two timing columns so runs can be compared byte for byte."""
    out = []
    for line in csv_text.splitlines():
        if line.startswith("#") or line == CSV_HEADER:
            out.append(line)
            continue
        cols = line.split(",")
        cols[5] = cols[6] = "*"
        out.append(",".join(cols))
    return "\n".join(out) + "\n"
