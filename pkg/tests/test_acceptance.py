"""Exit criteria.  Each test prints one PASS/FAIL line; all tolerances are exact
except the timing trend, which compares ratios measured in one run.

    pytest tests/test_acceptance.py -v -s
"""

import io
import itertools
import random

import pytest

from limbfield import (BinaryFieldParams, PrimeFieldParams, WideGFElement, binary_field,
                       fp_add, fp_div, fp_inv, fp_mul, fp_sub, gf_add, gf_div, gf_inv, gf_mul,
                       gf_reduce_counted, gf_square, prime_field)
from limbfield import oracle as O
from limbfield.bench import BenchConfig, emit_report, mask_timing, run_bench
from limbfield.catalog import BINARY_POLYS, PRIMES
from limbfield.cli import cli_main
from limbfield.words import WORD_SIZES

from conftest import oracle_mul

pytestmark = pytest.mark.slow


def report(number, text, ok):
    print(f"\n[criterion {number}] {'PASS' if ok else 'FAIL'}: {text}")
    assert ok, text


def test_c1_exhaustive_small_field():
    f = BinaryFieldParams(3, (0, 1), 8)
    pb = O.bits_from_int(f.modulus)
    elems = [f(v) for v in range(8)]
    mul_ok = all(int(gf_mul(a, b)) == oracle_mul(f, int(a), int(b))
                 for a, b in itertools.product(elems, elems))
    inv_ok = all(int(gf_inv(a)) == O.int_from_bits(O.oracle_gf_invmod(O.bits_from_int(int(a)), pb))
                 for a in elems[1:])
    axioms_ok = all(
        gf_mul(a, gf_add(b, c)) == gf_add(gf_mul(a, b), gf_mul(a, c))
        and gf_mul(gf_mul(a, b), c) == gf_mul(a, gf_mul(b, c))
        for a, b, c in itertools.product(elems, repeat=3))
    report(1, "GF(2^3): 64 products, 7 inverses, 512 axiom triples",
           mul_ok and inv_ok and axioms_ok)


@pytest.mark.parametrize("t", sorted(BINARY_POLYS))
def test_c2_nist_binary_equivalence(t):
    f = binary_field(t, 32)
    rng = random.Random(1000 + t)
    one = f.one()
    bad = 0
    for _ in range(1000):
        a, b = f.random(rng), f.random(rng)
        ab = gf_mul(a, b)
        sq = gf_square(a)
        ok = int(ab) == oracle_mul(f, int(a), int(b))
        ok &= sq == gf_mul(a, a)
        ok &= gf_square(gf_add(a, b)) == gf_add(sq, gf_square(b))
        if a:
            ok &= gf_mul(a, gf_inv(a)) == one
        x = a
        for _ in range(t):
            x = gf_square(x)
        ok &= x == a
        bad += not ok
    report(2, f"GF(2^{t}): 1000 pairs, mul=oracle, sq, Frobenius, inverse, a^(2^t)=a "
              f"({bad} failures)", bad == 0)


@pytest.mark.parametrize("t", sorted(BINARY_POLYS))
def test_c3_reduction_pass_bound(t):
    f = binary_field(t, 16)
    rng = random.Random(3000 + t)
    most = 0
    for _ in range(10000):
        wide = WideGFElement.from_int(f, rng.getrandbits(2 * t - 1))
        _, passes = gf_reduce_counted(wide)
        most = max(most, passes)
    report(3, f"GF(2^{t}): max reduction passes over 10000 inputs = {most}", most <= 2)


def _fixed_pairs(limit, seed):
    rng = random.Random(seed)
    return [(format(rng.randrange(limit), "x"), format(rng.randrange(1, limit), "x"))
            for _ in range(100)]


def _binary_results(f, pairs):
    out = []
    for ha, hb in pairs:
        a, b = f.from_hex(ha), f.from_hex(hb)
        out.append((gf_add(a, b).hex(), gf_square(a).hex(), gf_mul(a, b).hex(),
                    gf_inv(b).hex(), gf_div(a, b).hex()))
    return out


def _prime_results(f, pairs):
    out = []
    for ha, hb in pairs:
        a, b = f.from_hex(ha), f.from_hex(hb)
        out.append((fp_add(a, b).hex(), fp_sub(a, b).hex(), fp_mul(a, b).hex(),
                    fp_inv(b).hex(), fp_div(a, b).hex()))
    return out


@pytest.mark.parametrize("family,size", [("binary", t) for t in sorted(BINARY_POLYS)]
                         + [("prime", n) for n in sorted(PRIMES)])
def test_c4_word_size_invariance(family, size):
    if family == "binary":
        pairs = _fixed_pairs(1 << size, 4000 + size)
        results = {(L, s): _binary_results(binary_field(size, L, s), pairs)
                   for L in WORD_SIZES for s in (False, True)}
    else:
        pairs = _fixed_pairs(PRIMES[size], 4000 + size)
        results = {(L, s): _prime_results(prime_field(size, L, s), pairs)
                   for L in WORD_SIZES for s in (False, True)}
    first = results[(16, False)]
    same = all(r == first for r in results.values())
    report(4, f"{family} {size}: 100 hex pairs identical for L in {WORD_SIZES}, strict on/off",
           same)


@pytest.mark.parametrize("n", sorted(PRIMES))
def test_c5_prime_equivalence(n):
    f = prime_field(n, 32)
    p = f.modulus
    rng = random.Random(5000 + n)
    bad = 0
    for _ in range(1000):
        x, y = rng.randrange(p), rng.randrange(p)
        a, b = f(x), f(y)
        ok = int(fp_add(a, b)) == O.oracle_fp_arith("add", x, y, p)
        ok &= int(fp_sub(a, b)) == O.oracle_fp_arith("sub", x, y, p)
        ok &= int(fp_mul(a, b)) == O.oracle_fp_arith("mul", x, y, p)
        if x:
            ok &= fp_mul(a, fp_inv(a)) == f.one()
        bad += not ok
    report(5, f"p{n}: 1000 pairs add/sub/mul=oracle, a*inv(a)=1 ({bad} failures)", bad == 0)


def test_c5_exhaustive_127():
    f = PrimeFieldParams(7, 127, 8)
    elems = [f(v) for v in range(127)]
    ok = all(int(fp_mul(elems[x], elems[y])) == O.oracle_fp_arith("mul", x, y, 127)
             for x in range(127) for y in range(127))
    report(5, "p=127: all 16129 products match the oracle", ok)


def test_c6_trend_reproduction():
    cfg = BenchConfig(family="both", ops=["mul", "inv"], iters=10000, word_bits=16, seed=6)
    rep = run_bench(cfg)
    binary = {t: rep.ratio("binary", t) for t in sorted(BINARY_POLYS)}
    prime = {n: rep.ratio("prime", n) for n in sorted(PRIMES)}
    print("\n" + emit_report(rep, "table", reference=True))
    print("inv/mul binary:", {k: round(v, 1) for k, v in binary.items()})
    print("inv/mul prime: ", {k: round(v, 1) for k, v in prime.items()})
    report(6, f"min prime inv/mul {min(prime.values()):.1f} > "
              f"max binary inv/mul {max(binary.values()):.1f}",
           min(prime.values()) > max(binary.values()))


def _cli(*argv):
    out, err = io.StringIO(), io.StringIO()
    return cli_main(list(argv), out, err), out.getvalue()


def test_c7_cli_contract():
    code_self, _ = _cli("selftest")
    args = ("bench", "--family", "both", "--op", "mul", "--op", "inv", "--iters", "20",
            "--seed", "42", "--format", "csv")
    _, first = _cli(*args)
    _, second = _cli(*args)
    code_bad, _ = _cli("bench", "--size", "170")
    ok = code_self == 0 and mask_timing(first) == mask_timing(second) and code_bad == 2
    report(7, f"selftest exit {code_self}, masked CSV equal across runs, "
              f"--size 170 exit {code_bad}", ok)
