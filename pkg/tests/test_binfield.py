import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from limbfield import (BinaryFieldParams, WideGFElement, binary_field, gf_add, gf_div, gf_inv,
                       gf_mul, gf_mul_noreduce, gf_reduce, gf_reduce_counted, gf_square,
                       parse_poly_spec)
from limbfield.binfield import _reduce
from limbfield.errors import (ContractError, FieldMismatchError, FieldValidationError,
                              NotInvertibleError)
from limbfield.words import WORD_SIZES

from conftest import oracle_mul

NIST_T = (163, 233, 283, 409, 571)


def wide(f, value):
    return WideGFElement.from_int(f, value)


# GF(2^3), p = x^3 + x + 1; expected values from the oracle module

def test_add_examples(gf8):
    a = gf8(0x3)
    assert gf_add(a, gf8(0x5)) == gf8(0x6)
    assert a + a == gf8.zero()
    assert a + gf8.zero() == a


def test_reduce_examples(gf8):
    assert gf_reduce(wide(gf8, 0x10)) == gf8(0x6)
    assert gf_reduce(wide(gf8, 0x8)) == gf8(0x3)
    for v in range(8):
        assert gf_reduce(wide(gf8, v)) == gf8(v)


def test_reduce_rejects_high_degree(gf8):
    with pytest.raises(ContractError):
        gf_reduce(wide(gf8, 0x20))


def test_square_examples(gf8):
    assert gf_square(gf8(0x2)) == gf8(0x4)
    assert gf_square(gf8.zero()) == gf8.zero()
    assert gf_square(gf8.one()) == gf8.one()
    assert gf_square(gf8(0x3)) == gf8(0x5)


def test_mul_noreduce_examples(gf8):
    assert int(gf_mul_noreduce(gf8(0x2), gf8(0x4))) == 0x8
    assert int(gf_mul_noreduce(gf8(0x5), gf8.zero())) == 0
    assert int(gf_mul_noreduce(gf8(0x3), gf8(0x5))) == 0xF


def test_mul_examples(gf8):
    assert gf_mul(gf8(0x2), gf8(0x4)) == gf8(0x3)
    assert gf_mul(gf8(0x3), gf8(0x5)) == gf8(0x4)
    for v in range(8):
        assert gf_mul(gf8.one(), gf8(v)) == gf8(v)


def test_inv_examples(gf8):
    assert gf_inv(gf8.one()) == gf8.one()
    assert gf_inv(gf8(0x2)) == gf8(0x5)
    assert gf_inv(gf8(0x3)) == gf8(0x6)
    with pytest.raises(NotInvertibleError):
        gf_inv(gf8.zero())


def test_div_examples(gf8):
    for v in range(1, 8):
        assert gf_div(gf8(v), gf8(v)) == gf8.one()
        assert gf_div(gf8(v), gf8.one()) == gf8(v)
    assert gf_div(gf8(0x4), gf8(0x2)) == gf8(0x2)
    with pytest.raises(ZeroDivisionError):
        gf_div(gf8.one(), gf8.zero())


def test_field_mismatch(gf8):
    other = binary_field(163, 8)
    with pytest.raises(FieldMismatchError):
        gf_add(gf8.one(), other.one())
    with pytest.raises(FieldMismatchError):
        gf_mul(gf8.one(), gf8.with_word_bits(16).one())


def test_element_range_check(gf8):
    with pytest.raises(ContractError):
        gf8(0x8)


def test_params_validation():
    with pytest.raises(FieldValidationError, match="term count"):
        BinaryFieldParams(8, (1, 3, 4), 8)
    with pytest.raises(FieldValidationError, match="2d >= t-1"):
        BinaryFieldParams(163, (0, 3, 6, 120), 8)
    with pytest.raises(FieldValidationError, match="constant"):
        BinaryFieldParams(7, (1, 3), 8)
    with pytest.raises(FieldValidationError):
        BinaryFieldParams(7, (0, 7), 8)


def test_derived_sizes():
    f = binary_field(163, 16)
    assert (f.m, f.w, f.d) == (11, 21, 156)
    f = binary_field(571, 64)
    assert (f.m, f.w, f.d) == (9, 18, 561)


def test_trinomial_padding():
    f = binary_field(233, 16)
    assert f.red_exps == (0, 74, 74, 74)
    assert f.red_flags == (1, 1, 0, 0)


def test_inverse_reducible_modulus_raises():
    # x^4 + x^2 + 1 = (x^2 + x + 1)^2 passes the shape checks but is reducible
    f = parse_poly_spec("4:2,0", 8)
    assert f.warning
    with pytest.raises(NotInvertibleError):
        gf_inv(f(0b111))
    # units of the quotient ring are still inverted correctly
    a = f(0b10)
    assert gf_mul(a, gf_inv(a)) == f.one()


def test_exhaustive_gf8_against_oracle(gf8):
    elems = [gf8(v) for v in range(8)]
    for a, b in itertools.product(elems, elems):
        assert int(gf_mul(a, b)) == oracle_mul(gf8, int(a), int(b))
    for a in elems[1:]:
        assert gf_mul(a, gf_inv(a)) == gf8.one()


def test_exhaustive_gf256():
    f = BinaryFieldParams(8, (0, 1, 3, 4), 8)
    elems = [f(v) for v in range(256)]
    rng = random.Random(5)
    for a in elems[1:]:
        assert gf_mul(a, gf_inv(a)) == f.one()
        b = rng.choice(elems)
        assert int(gf_mul(a, b)) == oracle_mul(f, int(a), int(b))
        assert gf_square(a) == gf_mul(a, a)


@pytest.mark.parametrize("t", NIST_T)
@pytest.mark.parametrize("L", WORD_SIZES)
def test_square_methods_agree(t, L):
    f = binary_field(t, L)
    rng = random.Random(t * L)
    for _ in range(20):
        a = f.random(rng)
        assert gf_square(a, "bits") == gf_square(a, "table") == gf_mul(a, a)


def test_square_table_edge_words():
    for L in WORD_SIZES:
        f = binary_field(163, L)
        top = f((1 << 163) - 1)
        assert gf_square(top, "bits") == gf_square(top, "table")


@pytest.mark.parametrize("t", NIST_T)
def test_reduction_two_passes_worst_case(t):
    f = binary_field(t, 16)
    all_ones = (1 << (2 * t - 1)) - 1
    _, passes = gf_reduce_counted(wide(f, all_ones))
    assert 1 <= passes <= 2


def test_reduction_second_pass_happens():
    # an input whose fold lands above degree t needs the split recomputed
    t = 233
    f = binary_field(t, 16)
    red, passes = gf_reduce_counted(wide(f, 1 << (2 * t - 2)))
    assert passes == 2
    assert int(red) == oracle_mul(f, 1 << (t - 1), 1 << (t - 1))


def _field_elements(t):
    return st.integers(0, (1 << t) - 1)


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(NIST_T), st.sampled_from(WORD_SIZES), st.data())
def test_field_laws(t, L, data):
    f = binary_field(t, L)
    a, b, c = (f(data.draw(_field_elements(t))) for _ in range(3))
    assert gf_mul(a, b) == gf_mul(b, a)
    assert gf_mul(a, gf_add(b, c)) == gf_add(gf_mul(a, b), gf_mul(a, c))
    assert gf_square(gf_add(a, b)) == gf_add(gf_square(a), gf_square(b))
    assert int(gf_mul(a, b)) == oracle_mul(f, int(a), int(b))
    if a:
        assert gf_mul(a, gf_inv(a)) == f.one()
        assert gf_div(gf_mul(b, a), a) == b


@settings(max_examples=25, deadline=None)
@given(st.sampled_from(NIST_T), st.data())
def test_word_size_invariance(t, data):
    x, y = data.draw(_field_elements(t)), data.draw(_field_elements(t))
    results = set()
    for L in WORD_SIZES:
        for strict in (False, True):
            f = binary_field(t, L, strict)
            a, b = f(x), f(y)
            out = [gf_add(a, b), gf_mul(a, b), gf_square(a)]
            if y:
                out.append(gf_div(a, b))
            results.add(tuple(e.hex() for e in out))
    assert len(results) == 1


def test_fermat_small(gf8):
    for v in range(8):
        a = gf8(v)
        b = a
        for _ in range(3):
            b = gf_square(b)
        assert b == a


def test_hex_width_independent_of_word_size():
    widths = {len(binary_field(163, L)(5).hex()) for L in WORD_SIZES}
    assert widths == {41}


def test_reduce_internal_returns_m_words():
    f = binary_field(283, 32)
    red, _ = _reduce(f, [0xFFFFFFFF] * f.w)
    assert len(red) == f.m
