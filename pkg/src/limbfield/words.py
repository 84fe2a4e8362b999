"""Fixed-width L-bit word primitives.

Everything above this module is written in terms of these operations, so
the field code never touches an integer wider than one machine word of the
simulated target.  Two layers are provided:

* raw kernels (``xor_words``, ``shl_words``, ...) working on plain lists or
  tuples of ints plus an explicit word size; these are what the field
  modules call in their inner loops;
* the :class:`WordVec` value type and the checked operations
  (``xor_vec``, ``shl_bits``, ...) built on top of the kernels.

Bit ``k`` of an encoded bit string lives in bit ``k % L`` of word ``k // L``
(least significant word first).

The ``strict`` switch selects strict emulation: carries are recovered by
comparison after a wrapping add and word products go through half-word
splitting, so no intermediate ever needs more than ``L`` bits.  Results are
identical either way.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Sequence

from .errors import ContractError

WORD_SIZES = (8, 16, 32, 64)


def check_word_size(word_bits: int) -> int:
    if word_bits not in WORD_SIZES:
        raise ContractError(f"word size must be one of {WORD_SIZES}, got {word_bits!r}")
    return word_bits


def words_needed(bits: int, word_bits: int) -> int:
    return -(-bits // word_bits)


# -- conversions -------------------------------------------------------------

def int_to_words(value: int, length: int, word_bits: int) -> tuple[int, ...]:
    if value < 0 or value >> (length * word_bits):
        raise ContractError(f"{value:#x} does not fit in {length} words of {word_bits} bits")
    mask = (1 << word_bits) - 1
    return tuple((value >> (j * word_bits)) & mask for j in range(length))


def words_to_int(words: Sequence[int], word_bits: int) -> int:
    value = 0
    for w in reversed(words):
        value = (value << word_bits) | w
    return value


# -- raw kernels -------------------------------------------------------------

def xor_words(a: Sequence[int], b: Sequence[int]) -> list[int]:
    return [x ^ y for x, y in zip(a, b)]


def shl_words(a: Sequence[int], k: int, out_len: int, word_bits: int) -> list[int]:
    """Shift up by ``k`` bits into ``out_len`` words; overflow is dropped."""
    q, r = divmod(k, word_bits)
    s = ([0] * q + list(a))[:out_len]
    s += [0] * (out_len - len(s))
    if r == 0:
        return s
    low = (1 << (word_bits - r)) - 1
    back = word_bits - r
    # mask before shifting so the shifted value stays within L bits
    return [((x & low) << r) | (y >> back) for x, y in zip(s, [0] + s)]


def xor_shl_words(a: Sequence[int], b: Sequence[int], k: int, word_bits: int) -> list[int]:
    """``a ^ (b << k)`` truncated to ``len(a)`` words, in one pass."""
    n = len(a)
    q, r = divmod(k, word_bits)
    s = ([0] * q + list(b))[:n]
    s += [0] * (n - len(s))
    if r == 0:
        return [x ^ y for x, y in zip(a, s)]
    low = (1 << (word_bits - r)) - 1
    back = word_bits - r
    return [z ^ ((x & low) << r) ^ (y >> back) for z, x, y in zip(a, s, [0] + s)]


def shr_words(a: Sequence[int], k: int, word_bits: int, out_len: int | None = None) -> list[int]:
    if out_len is None:
        out_len = len(a)
    q, r = divmod(k, word_bits)
    s = list(a[q:q + out_len + 1])
    s += [0] * (out_len + 1 - len(s))
    if r == 0:
        return s[:out_len]
    low = (1 << r) - 1
    up = word_bits - r
    return [(x >> r) | ((y & low) << up) for x, y in zip(s, s[1:])]


def add_words(a: Sequence[int], b: Sequence[int], word_bits: int,
              strict: bool = False) -> tuple[list[int], int]:
    mask = (1 << word_bits) - 1
    out = []
    carry = 0
    if strict:
        for x, y in zip(a, b):
            s = (x + y) & mask
            c = s < x
            s2 = (s + carry) & mask
            c |= s2 < s
            out.append(s2)
            carry = int(c)
    else:
        put = out.append
        for x, y in zip(a, b):
            s = x + y + carry
            put(s & mask)
            carry = s >> word_bits
    return out, carry


def sub_words(a: Sequence[int], b: Sequence[int], word_bits: int,
              strict: bool = False) -> tuple[list[int], int]:
    mask = (1 << word_bits) - 1
    out = []
    borrow = 0
    if strict:
        for x, y in zip(a, b):
            s = (x - y) & mask
            c = x < y
            s2 = (s - borrow) & mask
            c |= s < borrow
            out.append(s2)
            borrow = int(c)
    else:
        put = out.append
        for x, y in zip(a, b):
            s = x - y - borrow
            put(s & mask)
            borrow = s < 0
    return out, int(borrow)


def cmp_words(a: Sequence[int], b: Sequence[int]) -> int:
    """Compare equal-length vectors as integers; returns -1, 0 or 1."""
    for j in range(len(a) - 1, -1, -1):
        x, y = a[j], b[j]
        if x != y:
            return 1 if x > y else -1
    return 0


def mul_word(x: int, y: int, word_bits: int, strict: bool = False) -> tuple[int, int]:
    """Widening product of two words as ``(lo, hi)``."""
    if not strict:
        p = x * y
        return p & ((1 << word_bits) - 1), p >> word_bits
    half = word_bits // 2
    hmask = (1 << half) - 1
    mask = (1 << word_bits) - 1
    x0, x1 = x & hmask, x >> half
    y0, y1 = y & hmask, y >> half
    p00 = x0 * y0
    p01 = x0 * y1
    p10 = x1 * y0
    p11 = x1 * y1
    mid = (p01 + p10) & mask
    mid_carry = mid < p01
    lo = (p00 + ((mid & hmask) << half)) & mask
    lo_carry = lo < p00
    hi = (p11 + (mid >> half) + (mid_carry << half) + lo_carry) & mask
    return lo, hi


def _bit_length_strict(x: int, word_bits: int) -> int:
    n = 0
    step = word_bits // 2
    while step:
        if x >> step:
            x >>= step
            n += step
        step //= 2
    return n + x


def degree_words(a: Sequence[int], word_bits: int, strict: bool = False) -> int:
    for j in range(len(a) - 1, -1, -1):
        x = a[j]
        if x:
            bl = _bit_length_strict(x, word_bits) if strict else x.bit_length()
            return j * word_bits + bl - 1
    return -1


# -- value type --------------------------------------------------------------

@dataclass(frozen=True)
class WordVec:
    """Immutable vector of L-bit words encoding a bit string."""

    words: tuple[int, ...]
    word_bits: int

    def __post_init__(self):
        check_word_size(self.word_bits)
        object.__setattr__(self, "words", tuple(self.words))
        top = 1 << self.word_bits
        for w in self.words:
            if not 0 <= w < top:
                raise ContractError(f"word {w:#x} out of range for L={self.word_bits}")

    @classmethod
    def from_int(cls, value: int, length: int, word_bits: int) -> WordVec:
        return cls(int_to_words(value, length, word_bits), word_bits)

    @classmethod
    def zeros(cls, length: int, word_bits: int) -> WordVec:
        return cls((0,) * length, word_bits)

    @classmethod
    def from_hex(cls, text: str, length: int, word_bits: int) -> WordVec:
        return cls.from_int(int(text, 16), length, word_bits)

    @property
    def capacity(self) -> int:
        return len(self.words) * self.word_bits

    def __len__(self):
        return len(self.words)

    def __getitem__(self, j):
        return self.words[j]

    def __iter__(self):
        return iter(self.words)

    def __int__(self):
        return words_to_int(self.words, self.word_bits)

    def hex(self) -> str:
        """Canonical form: lowercase hex padded to the vector's capacity."""
        return format(int(self), "0{}x".format(-(-self.capacity // 4)))

    def __repr__(self):
        return f"WordVec(0x{self.hex()}, L={self.word_bits})"


class WideningProduct(NamedTuple):
    lo: int
    hi: int


def _same_shape(a: WordVec, b: WordVec):
    if a.word_bits != b.word_bits or len(a) != len(b):
        raise ContractError(
            f"vector shape mismatch: {len(a)}x{a.word_bits} vs {len(b)}x{b.word_bits}")


def xor_vec(a: WordVec, b: WordVec) -> WordVec:
    _same_shape(a, b)
    return WordVec(tuple(xor_words(a.words, b.words)), a.word_bits)


def shl_bits(a: WordVec, k: int, out_len: int | None = None) -> WordVec:
    if out_len is None:
        out_len = len(a)
    if k < 0 or out_len < len(a):
        raise ContractError("shift needs k >= 0 and out_len >= len(a)")
    return WordVec(tuple(shl_words(a.words, k, out_len, a.word_bits)), a.word_bits)


def shr_bits(a: WordVec, k: int) -> WordVec:
    if k < 0:
        raise ContractError("shift count must be non-negative")
    return WordVec(tuple(shr_words(a.words, k, a.word_bits)), a.word_bits)


def add_with_carry(a: WordVec, b: WordVec, strict: bool = False) -> tuple[WordVec, int]:
    _same_shape(a, b)
    out, carry = add_words(a.words, b.words, a.word_bits, strict)
    return WordVec(tuple(out), a.word_bits), carry


def sub_with_borrow(a: WordVec, b: WordVec, strict: bool = False) -> tuple[WordVec, int]:
    _same_shape(a, b)
    out, borrow = sub_words(a.words, b.words, a.word_bits, strict)
    return WordVec(tuple(out), a.word_bits), borrow


def widening_mul(x: int, y: int, word_bits: int, strict: bool = False) -> WideningProduct:
    check_word_size(word_bits)
    top = 1 << word_bits
    if not (0 <= x < top and 0 <= y < top):
        raise ContractError(f"operands must be {word_bits}-bit words")
    return WideningProduct(*mul_word(x, y, word_bits, strict))


def degree(a: WordVec, strict: bool = False) -> int:
    """Index of the highest set bit, or -1 for the zero vector."""
    return degree_words(a.words, a.word_bits, strict)


def get_bit(a: WordVec, k: int) -> int:
    if not 0 <= k < a.capacity:
        raise ContractError(f"bit index {k} outside 0..{a.capacity - 1}")
    q, r = divmod(k, a.word_bits)
    return (a.words[q] >> r) & 1
