"""Finite field arithmetic for constrained word sizes.

GF(2^t) with trinomial/pentanomial moduli and NIST pseudo-Mersenne prime
fields, both built from L-bit word primitives (L in 8, 16, 32, 64).
"""

from .binfield import (BinaryFieldParams, GFElement, WideGFElement, gf_add, gf_div, gf_inv,
                       gf_mul, gf_mul_noreduce, gf_reduce, gf_reduce_counted, gf_square)
from .catalog import binary_field, list_fields, parse_poly_spec, prime_field, render_poly_spec
from .errors import (BenchConfigError, ContractError, FieldMismatchError, FieldValidationError,
                     NotInvertibleError, SpecParseError, UnknownFieldError)
from .primefield import (FpElement, PrimeFieldParams, fp_add, fp_div, fp_inv, fp_mul, fp_reduce,
                         fp_reduce_counted, fp_sub)
from .words import WORD_SIZES, WordVec

__version__ = "0.1.0"
