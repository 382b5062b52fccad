"""Exact arithmetic: Laurent polynomials, Q(v), two-variable polynomials,
cyclotomic fields and prime fields."""

from .bivariate import BivariatePoly, mixed_product
from .cyclotomic import CyclotomicNumber, cyclotomic_polynomial
from .laurent import ONE, V, ZERO, LaurentPoly, bar, exact_divide
from .parse import parse_laurent, parse_ratfunc
from .primefield import PrimeFieldElement, is_prime, multiplicative_order
from .ratfunc import RationalFunction, as_ratfunc
from .specialize import CyclotomicTarget, PrimeFieldTarget, cyclotomic_to_prime, specialize

__all__ = [
    "BivariatePoly", "mixed_product",
    "CyclotomicNumber", "cyclotomic_polynomial",
    "LaurentPoly", "ONE", "V", "ZERO", "bar", "exact_divide",
    "parse_laurent", "parse_ratfunc",
    "PrimeFieldElement", "is_prime", "multiplicative_order",
    "RationalFunction", "as_ratfunc",
    "CyclotomicTarget", "PrimeFieldTarget", "cyclotomic_to_prime", "specialize",
]
