"""Arithmetic in GF(2^t) = GF(2)[x]/p(x) on arrays of L-bit words.

``p(x) = x^t + r(x)`` is a trinomial or pentanomial.  Elements are held as
``m = ceil(t/L)`` words, unreduced products as ``w = ceil(2t/L)`` words.
Addition is word-wise XOR, reduction folds the high half back through
``x^t = r(x)``, squaring spreads bits to even positions, multiplication is
the shift-and-add scheme that needs only ``L`` one-bit shifts of the
multiplicand, and inversion is the shift-based extended Euclid.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from . import words as W
from .errors import ContractError, FieldMismatchError, FieldValidationError, NotInvertibleError

# SPREAD[b] has bit i of b moved to bit 2i.
SPREAD = tuple(sum(((b >> i) & 1) << (2 * i) for i in range(8)) for b in range(256))


@dataclass(frozen=True)
class BinaryFieldParams:
    """Parameters of GF(2)[x]/p(x) for a fixed word size.

    ``exps`` lists the exponents of r(x) in increasing order, 2 entries for a
    trinomial and 4 for a pentanomial.
    """

    t: int
    exps: tuple[int, ...]
    word_bits: int = 16
    strict: bool = False
    square_method: str = "table"
    warning: str | None = field(default=None, compare=False)

    m: int = field(init=False, repr=False)
    w: int = field(init=False, repr=False)
    d: int = field(init=False, repr=False)
    # padded i_0..i_3 and r_0..r_3 of the reduction loop
    red_exps: tuple[int, ...] = field(init=False, repr=False, compare=False)
    red_flags: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        W.check_word_size(self.word_bits)
        exps = tuple(self.exps)
        object.__setattr__(self, "exps", exps)
        t = self.t
        if not isinstance(t, int) or t < 2:
            raise FieldValidationError(f"degree must be an integer >= 2, got {t!r}")
        if len(exps) + 1 not in (3, 5):
            raise FieldValidationError(
                f"term count: p(x) has {len(exps) + 1} terms, need 3 (trinomial) or 5 (pentanomial)")
        if any(b <= a for a, b in zip(exps, exps[1:])) or exps[0] < 0:
            raise FieldValidationError("exponents must be distinct and non-negative")
        if exps[-1] >= t:
            raise FieldValidationError(f"max exponent {exps[-1]} must be below t={t}")
        if exps[0] != 0:
            raise FieldValidationError("constant term: p(x) must include x^0")
        d = t - exps[-1]
        if 2 * d < t - 1:
            raise FieldValidationError(f"2d >= t-1: d={d} gives 2d={2 * d} < {t - 1}")
        if self.square_method not in ("table", "bits"):
            raise ContractError(f"unknown square method {self.square_method!r}")
        L = self.word_bits
        object.__setattr__(self, "m", W.words_needed(t, L))
        object.__setattr__(self, "w", W.words_needed(2 * t, L))
        object.__setattr__(self, "d", d)
        pad = 4 - len(exps)
        object.__setattr__(self, "red_exps", exps + (exps[-1],) * pad)
        object.__setattr__(self, "red_flags", (1,) * len(exps) + (0,) * pad)

    @property
    def poly_exps(self) -> tuple[int, ...]:
        """Exponents of p(x), highest first."""
        return (self.t,) + tuple(reversed(self.exps))

    @property
    def modulus(self) -> int:
        return sum(1 << e for e in self.poly_exps)

    def with_word_bits(self, word_bits: int, strict: bool | None = None) -> BinaryFieldParams:
        return BinaryFieldParams(self.t, self.exps, word_bits,
                                 self.strict if strict is None else strict,
                                 self.square_method, self.warning)

    # element constructors
    def __call__(self, value: int) -> GFElement:
        if value < 0 or value >> self.t:
            raise ContractError(f"{value:#x} is not a reduced element of GF(2^{self.t})")
        return GFElement(self, W.int_to_words(value, self.m, self.word_bits))

    def from_hex(self, text: str) -> GFElement:
        return self(int(text, 16))

    def zero(self) -> GFElement:
        return GFElement(self, (0,) * self.m)

    def one(self) -> GFElement:
        return GFElement(self, (1,) + (0,) * (self.m - 1))

    def random(self, rng: random.Random, nonzero: bool = False) -> GFElement:
        while True:
            v = rng.getrandbits(self.t)
            if v or not nonzero:
                return self(v)

    def __str__(self):
        terms = " + ".join("1" if e == 0 else f"x^{e}" for e in self.poly_exps)
        return f"GF(2^{self.t}) mod {terms}, L={self.word_bits}"


class GFElement:
    """Reduced element: ``m`` words, bits at positions >= t are zero."""

    __slots__ = ("field", "words")

    def __init__(self, field: BinaryFieldParams, words):
        self.field = field
        self.words = tuple(words)

    @property
    def value(self) -> W.WordVec:
        return W.WordVec(self.words, self.field.word_bits)

    def __int__(self):
        return W.words_to_int(self.words, self.field.word_bits)

    def hex(self) -> str:
        """Lowercase hex padded to ceil(t/4) digits, independent of L."""
        return format(int(self), "0{}x".format(-(-self.field.t // 4)))

    def __bool__(self):
        return any(self.words)

    def __eq__(self, other):
        if not isinstance(other, GFElement):
            return NotImplemented
        return self.field == other.field and self.words == other.words

    def __hash__(self):
        return hash((self.field.t, self.field.exps, int(self)))

    def __repr__(self):
        return f"GFElement(0x{self.hex()}, t={self.field.t}, L={self.field.word_bits})"

    def __add__(self, other):
        return gf_add(self, other)

    __sub__ = __add__

    def __mul__(self, other):
        return gf_mul(self, other)

    def __truediv__(self, other):
        return gf_div(self, other)

    def square(self):
        return gf_square(self)

    def inverse(self):
        return gf_inv(self)


class WideGFElement:
    """Unreduced value of ``w`` words, degree at most 2t - 2."""

    __slots__ = ("field", "words")

    def __init__(self, field: BinaryFieldParams, words):
        self.field = field
        self.words = tuple(words)

    @classmethod
    def from_int(cls, field: BinaryFieldParams, value: int) -> WideGFElement:
        return cls(field, W.int_to_words(value, field.w, field.word_bits))

    @property
    def value(self) -> W.WordVec:
        return W.WordVec(self.words, self.field.word_bits)

    def __int__(self):
        return W.words_to_int(self.words, self.field.word_bits)

    def __eq__(self, other):
        if not isinstance(other, WideGFElement):
            return NotImplemented
        return self.field == other.field and self.words == other.words

    def __repr__(self):
        return f"WideGFElement({int(self):#x}, t={self.field.t}, L={self.field.word_bits})"


def _check_pair(a: GFElement, b: GFElement) -> BinaryFieldParams:
    f = a.field
    if f is not b.field and f != b.field:
        raise FieldMismatchError(f"GF(2^{f.t}) vs GF(2^{b.field.t})")
    return f


def gf_add(a: GFElement, b: GFElement) -> GFElement:
    f = _check_pair(a, b)
    return GFElement(f, W.xor_words(a.words, b.words))


def _reduce(f: BinaryFieldParams, a) -> tuple[list[int], int]:
    """Fold ``a`` (w words) below degree t; returns (m words, passes)."""
    L, t, wl = f.word_bits, f.t, f.w
    top_q, top_r = divmod(t, L)
    ex, flags = f.red_exps, f.red_flags
    a = list(a)
    passes = 0
    while W.degree_words(a, L, f.strict) >= t:
        passes += 1
        # a = l + h x^t, recomputed on every pass
        h = W.shr_words(a, t, L)
        l = a[:top_q] + [0] * (wl - top_q)
        if top_r:
            l[top_q] = a[top_q] & ((1 << top_r) - 1)
        a = l
        g = W.shl_words(h, ex[0], wl, L) if ex[0] else h
        for i in range(4):
            if flags[i]:
                a = W.xor_words(a, g)
            if i < 3:
                gap = ex[i + 1] - ex[i]
                if gap:
                    g = W.shl_words(g, gap, wl, L)
    return a[: f.m], passes


def gf_reduce_counted(a: WideGFElement) -> tuple[GFElement, int]:
    """Reduce and also report how many passes of the fold loop ran."""
    f = a.field
    if W.degree_words(a.words, f.word_bits) > 2 * f.t - 2:
        raise ContractError(f"reduction input must have degree <= {2 * f.t - 2}")
    red, passes = _reduce(f, a.words)
    return GFElement(f, red), passes


def gf_reduce(a: WideGFElement) -> GFElement:
    return gf_reduce_counted(a)[0]


def _spread_table(f: BinaryFieldParams, a) -> list[int]:
    L = f.word_bits
    out = [0] * (2 * f.m)
    if L == 8:
        for i, x in enumerate(a):
            s = SPREAD[x]
            out[2 * i] = s & 0xFF
            out[2 * i + 1] = s >> 8
        return out
    # byte k of a word spreads to 16 bits, landing in the low output word
    # for k < L/16 and in the high one otherwise
    half = L // 16
    lo_shifts = [(8 * k, 16 * k) for k in range(half)]
    hi_shifts = [(8 * (k + half), 16 * k) for k in range(half)]
    for i, x in enumerate(a):
        if x:
            lo = hi = 0
            for src, dst in lo_shifts:
                lo |= SPREAD[(x >> src) & 0xFF] << dst
            for src, dst in hi_shifts:
                hi |= SPREAD[(x >> src) & 0xFF] << dst
            out[2 * i] = lo
            out[2 * i + 1] = hi
    return out


def _spread_bits(f: BinaryFieldParams, a) -> list[int]:
    L = f.word_bits
    out = [0] * (2 * f.m)
    for i in range(f.t):
        if (a[i // L] >> (i % L)) & 1:
            q, r = divmod(2 * i, L)
            out[q] |= 1 << r
    return out


def gf_square(a: GFElement, method: str | None = None) -> GFElement:
    """Square by moving bit i to bit 2i, then reducing."""
    f = a.field
    method = method or f.square_method
    if method == "table":
        b = _spread_table(f, a.words)
    elif method == "bits":
        b = _spread_bits(f, a.words)
    else:
        raise ContractError(f"unknown square method {method!r}")
    return GFElement(f, _reduce(f, b[: f.w])[0])


def _mul_noreduce(f: BinaryFieldParams, a, b) -> list[int]:
    L, m, wl = f.word_bits, f.m, f.w
    c = [0] * wl
    d = list(b) + [0] * (wl - m)
    for e in range(L):
        for i in range(m):
            if (a[i] >> e) & 1:
                # c_j ^= d_{j-i} for j = i..w-1
                c[i:] = [x ^ y for x, y in zip(c[i:], d)]
        d = W.shl_words(d, 1, wl, L)
    return c


def gf_mul_noreduce(a: GFElement, b: GFElement) -> WideGFElement:
    f = _check_pair(a, b)
    return WideGFElement(f, _mul_noreduce(f, a.words, b.words))


def gf_mul(a: GFElement, b: GFElement) -> GFElement:
    f = _check_pair(a, b)
    return GFElement(f, _reduce(f, _mul_noreduce(f, a.words, b.words))[0])


def gf_inv(a: GFElement) -> GFElement:
    """Inverse by the shift-based extended Euclid.

    Maintains ``g1*a = u`` and ``g2*a = v`` (mod p) while shrinking u, v.
    Raises NotInvertibleError for zero, or when the modulus is reducible
    and shares a factor with ``a``.
    """
    f = a.field
    L, t, strict = f.word_bits, f.t, f.strict
    if not any(a.words):
        raise NotInvertibleError("zero has no inverse")
    cap = W.words_needed(t + 1, L)  # room for p itself, degree t
    u = list(a.words) + [0] * (cap - f.m)
    v = list(W.int_to_words(f.modulus, cap, L))
    g1 = [1] + [0] * (cap - 1)
    g2 = [0] * cap
    deg = W.degree_words
    du = deg(u, L, strict)
    dv = t
    while du != 0:
        if du < 0:
            raise NotInvertibleError(f"value shares a factor with reducible modulus of degree {t}")
        j = du - dv
        if j < 0:
            u, v = v, u
            g1, g2 = g2, g1
            du, dv = dv, du
            j = -j
        u = W.xor_shl_words(u, v, j, L)
        g1 = W.xor_shl_words(g1, g2, j, L)
        du = deg(u, L, strict)
    if deg(g1, L) >= t:
        # g1 can reach degree t only if it equals p, which would mean a = 0
        raise ContractError("inverse escaped the reduced range")
    return GFElement(f, g1[: f.m])


def gf_div(a: GFElement, b: GFElement) -> GFElement:
    _check_pair(a, b)
    if not any(b.words):
        raise ZeroDivisionError("division by zero field element")
    return gf_mul(a, gf_inv(b))
