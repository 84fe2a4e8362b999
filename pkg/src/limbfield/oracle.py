"""Naive reference arithmetic, used only to check the word-level code.

Binary polynomials are lists of coefficients (index = exponent), grown and
trimmed as needed.  Nothing here knows about words, word sizes or the
reduction shape of p(x).  Prime-field references use Python integers with
a division-based extended Euclid, which is structurally unlike the binary
variant in ``primefield``.
"""

from __future__ import annotations

from .errors import ContractError, NotInvertibleError


def bits_from_int(value: int) -> list[int]:
    if value < 0:
        raise ContractError("negative value")
    return [int(c) for c in reversed(bin(value)[2:])] if value else []


def int_from_bits(bits) -> int:
    text = "".join(str(b) for b in reversed(list(bits)))
    return int(text, 2) if text else 0


def _trim(bits: list[int]) -> list[int]:
    while bits and not bits[-1]:
        bits.pop()
    return bits


def poly_mul(a, b) -> list[int]:
    a, b = _trim(list(a)), _trim(list(b))
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    nb = len(b)
    for i, coef in enumerate(a):
        if coef:
            out[i:i + nb] = [x ^ y for x, y in zip(out[i:i + nb], b)]
    return _trim(out)


def poly_divmod(a, p) -> tuple[list[int], list[int]]:
    """Long division over GF(2): returns (quotient, remainder)."""
    p = _trim(list(p))
    if not p:
        raise ContractError("division by the zero polynomial")
    rem = _trim(list(a))
    dp = len(p) - 1
    quot = [0] * max(len(rem) - dp, 0)
    while len(rem) - 1 >= dp:
        shift = len(rem) - 1 - dp
        quot[shift] = 1
        rem[shift:] = [x ^ y for x, y in zip(rem[shift:], p)]
        _trim(rem)
    return _trim(quot), rem


def poly_add(a, b) -> list[int]:
    a, b = list(a), list(b)
    if len(a) < len(b):
        a, b = b, a
    return _trim([x ^ y for x, y in zip(a, b + [0] * (len(a) - len(b)))])


def oracle_gf_mulmod(a, b, p) -> list[int]:
    if len(_trim(list(p))) < 2:
        raise ContractError("modulus must have degree >= 1")
    return poly_divmod(poly_mul(a, b), p)[1]


def oracle_gf_invmod(a, p) -> list[int]:
    a = _trim(list(a))
    p = _trim(list(p))
    if not a:
        raise NotInvertibleError("zero has no inverse")
    t = len(p) - 1
    if t <= 16:
        for y in range(1, 1 << t):
            cand = bits_from_int(y)
            if oracle_gf_mulmod(a, cand, p) == [1]:
                return cand
        raise NotInvertibleError("no inverse: modulus is reducible")
    # division-based extended Euclid: s*a = r (mod p)
    r0, r1 = p, poly_divmod(a, p)[1]
    s0, s1 = [], [1]
    while r1:
        q, rem = poly_divmod(r0, r1)
        r0, r1 = r1, rem
        s0, s1 = s1, poly_add(s0, poly_mul(q, s1))
    if r0 != [1]:
        raise NotInvertibleError("no inverse: modulus is reducible")
    return poly_divmod(s0, p)[1]


def _egcd_inverse(a: int, p: int) -> int:
    r0, r1 = p, a % p
    s0, s1 = 0, 1
    while r1:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
    if r0 != 1:
        raise NotInvertibleError(f"{a} has no inverse mod {p}")
    return s0 % p


def oracle_fp_arith(op: str, a: int, b: int | None, p: int) -> int:
    if op == "add":
        return (a + b) % p
    if op == "sub":
        return (a - b) % p
    if op == "mul":
        return (a * b) % p
    if op == "inv":
        if a % p == 0:
            raise NotInvertibleError("zero has no inverse")
        return _egcd_inverse(a, p)
    raise ContractError(f"unknown op {op!r}")
