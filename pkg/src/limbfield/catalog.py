"""NIST field parameters and the textual polynomial spec format.

A polynomial spec reads ``t:e_k,...,e_0`` and lists the exponents of
r(x) = p(x) - x^t in strictly decreasing order, e.g. ``163:7,6,3,0`` for
x^163 + x^7 + x^6 + x^3 + 1.  Custom polynomials are checked for shape only;
irreducibility is never tested, so such fields carry a warning.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Union

from .binfield import BinaryFieldParams
from .errors import SpecParseError, UnknownFieldError
from .primefield import PrimeFieldParams

BINARY_POLYS = {
    163: (0, 3, 6, 7),
    233: (0, 74),
    283: (0, 5, 7, 12),
    409: (0, 87),
    571: (0, 2, 5, 10),
}

PRIMES = {
    192: 2**192 - 2**64 - 1,
    224: 2**224 - 2**96 + 1,
    256: 2**256 - 2**224 + 2**192 + 2**96 - 1,
    384: 2**384 - 2**128 - 2**96 + 2**32 - 1,
    521: 2**521 - 1,
}

# Reference timings on an ATmega168 at 16 MHz, milliseconds.
PAPER_TIMINGS_MS = {
    ("binary", 163): {"mul": 16, "inv": 60},
    ("binary", 233): {"mul": 29, "inv": 105},
    ("binary", 283): {"mul": 40, "inv": 145},
    ("binary", 409): {"mul": 80, "inv": 282},
    ("binary", 571): {"mul": 149, "inv": 505},
    ("prime", 192): {"mul": 6, "inv": 234},
    ("prime", 224): {"mul": 7, "inv": 344},
    ("prime", 256): {"mul": 9, "inv": 490},
    ("prime", 384): {"mul": 18, "inv": 1442},
    ("prime", 521): {"mul": 29, "inv": 3258},
}

CUSTOM_WARNING = "custom polynomial: irreducibility not checked"


@dataclass(frozen=True)
class FieldDescriptor:
    family: str
    size: int
    params: Union[BinaryFieldParams, PrimeFieldParams]

    def describe(self) -> str:
        if self.family == "binary":
            return f"binary {self.size:4d}  p(x) = {poly_text(self.params)}"
        return f"prime  {self.size:4d}  p = {PRIME_TEXT[self.size]}"


PRIME_TEXT = {
    192: "2^192 - 2^64 - 1",
    224: "2^224 - 2^96 + 1",
    256: "2^256 - 2^224 + 2^192 + 2^96 - 1",
    384: "2^384 - 2^128 - 2^96 + 2^32 - 1",
    521: "2^521 - 1",
}


def binary_field(t: int, word_bits: int = 16, strict: bool = False) -> BinaryFieldParams:
    try:
        exps = BINARY_POLYS[t]
    except KeyError:
        raise UnknownFieldError(
            f"no catalog binary field of degree {t} (known: {sorted(BINARY_POLYS)})") from None
    return BinaryFieldParams(t, exps, word_bits, strict)


def prime_field(bits: int, word_bits: int = 16, strict: bool = False) -> PrimeFieldParams:
    try:
        p = PRIMES[bits]
    except KeyError:
        raise UnknownFieldError(
            f"no catalog prime field of {bits} bits (known: {sorted(PRIMES)})") from None
    return PrimeFieldParams(bits, p, word_bits, strict)


def list_fields(word_bits: int = 16) -> list[FieldDescriptor]:
    out = [FieldDescriptor("binary", t, binary_field(t, word_bits)) for t in BINARY_POLYS]
    out += [FieldDescriptor("prime", n, prime_field(n, word_bits)) for n in PRIMES]
    return out


def poly_text(params: BinaryFieldParams) -> str:
    return " + ".join("1" if e == 0 else "x" if e == 1 else f"x^{e}" for e in params.poly_exps)


def render_poly_spec(params: BinaryFieldParams) -> str:
    return f"{params.t}:" + ",".join(str(e) for e in reversed(params.exps))


_SPEC_RE = re.compile(r"^\s*(\d+)\s*:\s*(\d+(?:\s*,\s*\d+)*)\s*$")


def parse_poly_spec(spec: str, word_bits: int = 16, strict: bool = False) -> BinaryFieldParams:
    """Parse ``"t:e_k,...,e_0"`` into validated field parameters.

    Raises SpecParseError on bad syntax and FieldValidationError (naming the
    violated rule) on a structurally unusable polynomial.
    """
    match = _SPEC_RE.match(spec)
    if not match:
        raise SpecParseError(f"expected 't:e_k,...,e_0', got {spec!r}")
    t = int(match.group(1))
    exps = [int(e) for e in match.group(2).split(",")]
    if any(b >= a for a, b in zip(exps, exps[1:])):
        raise SpecParseError(f"exponents must be strictly decreasing in {spec!r}")
    exps = tuple(reversed(exps))
    warning = None if BINARY_POLYS.get(t) == exps else CUSTOM_WARNING
    return BinaryFieldParams(t, exps, word_bits, strict, warning=warning)
