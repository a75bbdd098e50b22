"""Exact apolarity, Groebner bases and ideal arithmetic over the rationals."""

from .apolarity import DualPairing, apolar_hilbert, apolar_ideal, catalecticant, contract
from .groebner import (
    GroebnerBasis,
    HilbertFunction,
    InfiniteQuotientError,
    NotHomogeneousError,
    buchberger,
    hilbert_function,
    is_zero_dimensional,
    membership,
    quotient_dimension,
    reduce,
    socle_degree,
    standard_monomials,
)
from .ideals import (
    Ideal,
    homogenize,
    ideal_colon,
    ideal_equal,
    ideal_intersect,
    ideal_power,
    ideal_product,
    ideal_sum,
    irrelevant_saturation,
    saturate,
)
from .linalg import RationalMatrix, kernel_basis, rank, rref
from .parser import ParseError, parse_ideal, parse_polynomial, serialize
from .poly import (
    GREVLEX,
    GRLEX,
    LEX,
    BlockOrder,
    ContextMismatchError,
    Monomial,
    MonomialOrder,
    Polynomial,
    RingContext,
    compare,
    poly_add,
    poly_mul,
    substitute,
)

__version__ = "0.1.0"

__all__ = [
    "apolar_hilbert",
    "apolar_ideal",
    "BlockOrder",
    "buchberger",
    "catalecticant",
    "compare",
    "ContextMismatchError",
    "contract",
    "DualPairing",
    "GREVLEX",
    "GRLEX",
    "GroebnerBasis",
    "hilbert_function",
    "HilbertFunction",
    "homogenize",
    "Ideal",
    "ideal_colon",
    "ideal_equal",
    "ideal_intersect",
    "ideal_power",
    "ideal_product",
    "ideal_sum",
    "InfiniteQuotientError",
    "irrelevant_saturation",
    "is_zero_dimensional",
    "kernel_basis",
    "LEX",
    "membership",
    "Monomial",
    "MonomialOrder",
    "NotHomogeneousError",
    "parse_ideal",
    "parse_polynomial",
    "ParseError",
    "poly_add",
    "poly_mul",
    "Polynomial",
    "quotient_dimension",
    "rank",
    "RationalMatrix",
    "reduce",
    "RingContext",
    "rref",
    "saturate",
    "serialize",
    "socle_degree",
    "standard_monomials",
    "substitute",
]
