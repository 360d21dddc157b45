"""Exact tools for PT-matrices: finite multiplicative order and ASM-permutability."""

from .matrix import IntMatrix, Permutation, TBlockSpec, conjugate, is_asm, parse_matrix, format_matrix
from .poly import IntPolynomial, char_poly, cyclotomic
from .order import OrderResult, brute_force_order, finite_order, possible_gl_orders, permutation_orders
from .forms import PTType, standard_matrix
from .graph import Classification, classify_matrix
from .asm import find_asm_ordering, asm_permutable_theorem
from .enumerate import FiniteOrderRecord, enumerate_finite_order, exotic_orders

__all__ = [
    "IntMatrix", "Permutation", "TBlockSpec", "conjugate", "is_asm", "parse_matrix", "format_matrix",
    "IntPolynomial", "char_poly", "cyclotomic",
    "OrderResult", "brute_force_order", "finite_order", "possible_gl_orders", "permutation_orders",
    "PTType", "standard_matrix", "Classification", "classify_matrix",
    "find_asm_ordering", "asm_permutable_theorem",
    "FiniteOrderRecord", "enumerate_finite_order", "exotic_orders",
]
