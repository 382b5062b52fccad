"""Exact computations with the type-A Hecke algebra, the generic q-Schur
algebra in Du's canonical basis, its Wedderburn basis and asymptotic algebra."""

__version__ = "0.1.0"
