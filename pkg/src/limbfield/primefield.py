"""Arithmetic modulo a pseudo-Mersenne prime p = 2^n - r on L-bit words.

This is the comparison track for the binary fields: add with carry,
subtract with borrow, schoolbook word-by-word products, reduction by
folding ``hi * 2^n -> hi * r`` and inversion by binary extended Euclid.

``r`` may span several words (p256, p384), so the fold is a full
multiword product and may need more than one or two rounds; the number of
rounds is bounded per prime and checked at runtime.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from . import words as W
from .errors import ContractError, FieldMismatchError, FieldValidationError, NotInvertibleError


def _fold_limit(n: int, r: int) -> int:
    # Worst-case bit length starting from a product of two reduced values.
    k = r.bit_length()
    bits, rounds = 2 * n, 0
    while bits > n + 1:
        bits = max(n, k + bits - n) + 1
        rounds += 1
    # from n+1 bits the high part is 1 and two more folds always suffice
    return rounds + 2


@dataclass(frozen=True)
class PrimeFieldParams:
    n: int
    modulus: int
    word_bits: int = 16
    strict: bool = False

    m: int = field(init=False, repr=False)
    p_words: tuple[int, ...] = field(init=False, repr=False, compare=False)
    fold_words: tuple[int, ...] = field(init=False, repr=False, compare=False)
    fold_limit: int = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        W.check_word_size(self.word_bits)
        n, p = self.n, self.modulus
        if p <= 2 or p % 2 == 0:
            raise FieldValidationError(f"modulus must be an odd number > 2, got {p}")
        if p >> n or not p >> (n - 1):
            raise FieldValidationError(f"modulus must have exactly {n} bits")
        L = self.word_bits
        m = W.words_needed(n, L)
        r = (1 << n) - p
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "p_words", W.int_to_words(p, m, L))
        object.__setattr__(self, "fold_words",
                           W.int_to_words(r, max(1, W.words_needed(r.bit_length(), L)), L))
        object.__setattr__(self, "fold_limit", _fold_limit(n, r))

    @property
    def p(self) -> W.WordVec:
        return W.WordVec(self.p_words, self.word_bits)

    @property
    def fold(self) -> W.WordVec:
        return W.WordVec(self.fold_words, self.word_bits)

    def with_word_bits(self, word_bits: int, strict: bool | None = None) -> PrimeFieldParams:
        return PrimeFieldParams(self.n, self.modulus, word_bits,
                                self.strict if strict is None else strict)

    def __call__(self, value: int) -> FpElement:
        if not 0 <= value < self.modulus:
            raise ContractError(f"{value} is not a reduced residue mod p{self.n}")
        return FpElement(self, W.int_to_words(value, self.m, self.word_bits))

    def from_hex(self, text: str) -> FpElement:
        return self(int(text, 16))

    def zero(self) -> FpElement:
        return FpElement(self, (0,) * self.m)

    def one(self) -> FpElement:
        return FpElement(self, (1,) + (0,) * (self.m - 1))

    def random(self, rng: random.Random, nonzero: bool = False) -> FpElement:
        return self(rng.randrange(1 if nonzero else 0, self.modulus))

    def __str__(self):
        return f"GF(p{self.n}) p={self.modulus:#x}, L={self.word_bits}"


class FpElement:
    __slots__ = ("field", "words")

    def __init__(self, field: PrimeFieldParams, words):
        self.field = field
        self.words = tuple(words)

    @property
    def value(self) -> W.WordVec:
        return W.WordVec(self.words, self.field.word_bits)

    def __int__(self):
        return W.words_to_int(self.words, self.field.word_bits)

    def hex(self) -> str:
        return format(int(self), "0{}x".format(-(-self.field.n // 4)))

    def __bool__(self):
        return any(self.words)

    def __eq__(self, other):
        if not isinstance(other, FpElement):
            return NotImplemented
        return self.field == other.field and self.words == other.words

    def __hash__(self):
        return hash((self.field.modulus, int(self)))

    def __repr__(self):
        return f"FpElement({int(self)}, p{self.field.n}, L={self.field.word_bits})"

    def __add__(self, other):
        return fp_add(self, other)

    def __sub__(self, other):
        return fp_sub(self, other)

    def __mul__(self, other):
        return fp_mul(self, other)

    def __truediv__(self, other):
        return fp_div(self, other)

    def inverse(self):
        return fp_inv(self)


def _check_pair(a: FpElement, b: FpElement) -> PrimeFieldParams:
    f = a.field
    if f is not b.field and f != b.field:
        raise FieldMismatchError(f"p{f.n} vs p{b.field.n}")
    return f


def _add_mod(f: PrimeFieldParams, a, b) -> list[int]:
    L, s = f.word_bits, f.strict
    total, carry = W.add_words(a, b, L, s)
    diff, borrow = W.sub_words(total, f.p_words, L, s)
    # subtract p once if the sum overflowed the words or reached p
    return diff if carry or not borrow else total


def _sub_mod(f: PrimeFieldParams, a, b) -> list[int]:
    L, s = f.word_bits, f.strict
    diff, borrow = W.sub_words(a, b, L, s)
    if borrow:
        diff, _ = W.add_words(diff, f.p_words, L, s)
    return diff


def fp_add(a: FpElement, b: FpElement) -> FpElement:
    f = _check_pair(a, b)
    return FpElement(f, _add_mod(f, a.words, b.words))


def fp_sub(a: FpElement, b: FpElement) -> FpElement:
    f = _check_pair(a, b)
    return FpElement(f, _sub_mod(f, a.words, b.words))


def _mul_words(a, b, L: int, strict: bool) -> list[int]:
    """Schoolbook product, len(a) + len(b) words."""
    mask = (1 << L) - 1
    c = [0] * (len(a) + len(b))
    if not strict:
        for i, x in enumerate(a):
            if not x:
                continue
            carry = 0
            k = i
            for y in b:
                s = c[k] + x * y + carry
                c[k] = s & mask
                carry = s >> L
                k += 1
            c[k] = carry
        return c
    mul = W.mul_word
    for i, x in enumerate(a):
        if not x:
            continue
        carry = 0
        k = i
        for y in b:
            lo, hi = mul(x, y, L, True)
            s = (c[k] + lo) & mask
            c1 = s < lo
            s2 = (s + carry) & mask
            c2 = s2 < s
            c[k] = s2
            carry = (hi + c1 + c2) & mask  # fits: c + x*y + carry < 2^(2L)
            k += 1
        c[k] = carry
    return c


def _trim(x: list[int]) -> list[int]:
    n = len(x)
    while n > 1 and not x[n - 1]:
        n -= 1
    return x[:n]


def _reduce(f: PrimeFieldParams, x) -> tuple[list[int], int]:
    L, n, m, s = f.word_bits, f.n, f.m, f.strict
    nq, nr = divmod(n, L)
    x = _trim(list(x))
    folds = 0
    while W.degree_words(x, L, s) >= n:
        folds += 1
        if folds > f.fold_limit:
            raise AssertionError(f"fold bound {f.fold_limit} exceeded for p{n}")
        hi = _trim(W.shr_words(x, n, L))
        lo = x[:nq] + [0] * (m - nq)
        if nr:
            lo[nq] = x[nq] & ((1 << nr) - 1)
        prod = _mul_words(hi, f.fold_words, L, s)
        size = max(len(prod), m) + 1
        total, _ = W.add_words(lo + [0] * (size - m), prod + [0] * (size - len(prod)), L, s)
        x = _trim(total)
    x = x + [0] * (m - len(x))
    # x < 2^n < 2p here, so at most one subtraction
    while W.cmp_words(x, f.p_words) >= 0:
        x, _ = W.sub_words(x, f.p_words, L, s)
    return x, folds


def fp_reduce_counted(f: PrimeFieldParams, x) -> tuple[FpElement, int]:
    if isinstance(x, W.WordVec):
        x = x.words
    if W.words_to_int(x, f.word_bits) >= f.modulus ** 2:
        raise ContractError("reduction input must be below p^2")
    red, folds = _reduce(f, x)
    return FpElement(f, red), folds


def fp_reduce(f: PrimeFieldParams, x) -> FpElement:
    """Reduce a value below p^2 (at most 2m words) to its residue."""
    return fp_reduce_counted(f, x)[0]


def fp_mul(a: FpElement, b: FpElement) -> FpElement:
    f = _check_pair(a, b)
    prod = _mul_words(a.words, b.words, f.word_bits, f.strict)
    return FpElement(f, _reduce(f, prod)[0])


def fp_inv(a: FpElement) -> FpElement:
    """Inverse by the binary extended Euclidean algorithm.

    Keeps ``A*a = u`` and ``C*a = v`` (mod p); stops when u = 0, where
    v = 1 and C is the inverse.
    """
    f = a.field
    L, s, p = f.word_bits, f.strict, f.p_words
    if not any(a.words):
        raise NotInvertibleError("zero has no inverse")
    top = L - 1

    def halve_mod(x):
        if not x[0] & 1:
            return W.shr_words(x, 1, L)
        y, carry = W.add_words(x, p, L, s)
        y = W.shr_words(y, 1, L)
        y[-1] |= carry << top
        return y

    def strip_twos(x, g):
        # x = x / 2^z and g = g / 2^z (mod p) for the trailing zeros z of x
        z = 0
        while not x[z // L] >> (z % L) & 1:
            z += 1
        for _ in range(z):
            g = halve_mod(g)
        return W.shr_words(x, z, L), g

    u = list(a.words)
    v = list(p)
    A = [1] + [0] * (f.m - 1)
    C = [0] * f.m
    while True:
        if not u[0] & 1:
            u, A = strip_twos(u, A)
        if not v[0] & 1:
            v, C = strip_twos(v, C)
        if W.cmp_words(u, v) >= 0:
            u, _ = W.sub_words(u, v, L, s)
            A = _sub_mod(f, A, C)
            if not any(u):
                break
        else:
            v, _ = W.sub_words(v, u, L, s)
            C = _sub_mod(f, C, A)
    if v[0] != 1 or any(v[1:]):
        raise NotInvertibleError("value shares a factor with the modulus")
    return FpElement(f, C)


def fp_div(a: FpElement, b: FpElement) -> FpElement:
    _check_pair(a, b)
    if not any(b.words):
        raise ZeroDivisionError("division by zero field element")
    return fp_mul(a, fp_inv(b))
