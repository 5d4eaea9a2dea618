"""Exact LLT polynomials, their colored vertex model, and the partition-swapping bijection."""

from .poly import Monomial, Polynomial, equivalence_shift, is_symmetric, scale_t, substitute_t_inverse
from .shapes import Cell, ShapeTuple, SkewShape, count_triples, swap_adjacent, triples
from .tableaux import coinv, enumerate_ssyt, inversion_llt, llt_poly
from .lattice import LatticeConfig, enumerate_configs, partition_function

__all__ = [
    "Cell", "LatticeConfig", "Monomial", "Polynomial", "ShapeTuple", "SkewShape",
    "coinv", "count_triples", "enumerate_configs", "enumerate_ssyt", "equivalence_shift",
    "inversion_llt", "is_symmetric", "llt_poly", "partition_function", "scale_t",
    "substitute_t_inverse", "swap_adjacent", "triples",
]
