"""Elements of the prime field F_p."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache


@lru_cache(maxsize=None)
def is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


def multiplicative_order(x: int, p: int) -> int:
    x %= p
    if x == 0:
        raise ValueError("zero has no multiplicative order")
    k, y = 1, x
    while y != 1:
        y = y * x % p
        k += 1
    return k


class PrimeFieldElement:
    __slots__ = ("modulus", "residue")

    def __init__(self, modulus: int, residue):
        if not is_prime(modulus):
            raise ValueError(f"{modulus} is not prime")
        self.modulus = modulus
        if isinstance(residue, Fraction):
            den = residue.denominator % modulus
            if den == 0:
                raise ZeroDivisionError(f"denominator {residue.denominator} vanishes mod {modulus}")
            residue = residue.numerator * pow(den, -1, modulus)
        self.residue = int(residue) % modulus

    @classmethod
    def _raw(cls, p, r):
        obj = cls.__new__(cls)
        obj.modulus = p
        obj.residue = r
        return obj

    def _coerce(self, other):
        if isinstance(other, PrimeFieldElement):
            if other.modulus != self.modulus:
                raise ValueError("mixing different prime fields")
            return other
        if isinstance(other, (int, Fraction)):
            return PrimeFieldElement(self.modulus, other)
        return None

    def is_zero(self) -> bool:
        return self.residue == 0

    def __bool__(self):
        return self.residue != 0

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return PrimeFieldElement._raw(self.modulus, (self.residue + o.residue) % self.modulus)

    __radd__ = __add__

    def __neg__(self):
        return PrimeFieldElement._raw(self.modulus, -self.residue % self.modulus)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return PrimeFieldElement._raw(self.modulus, self.residue * o.residue % self.modulus)

    __rmul__ = __mul__

    def inverse(self) -> "PrimeFieldElement":
        if self.residue == 0:
            raise ZeroDivisionError("inverse of zero in a prime field")
        return PrimeFieldElement._raw(self.modulus, pow(self.residue, -1, self.modulus))

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** -k
        return PrimeFieldElement._raw(self.modulus, pow(self.residue, k, self.modulus))

    def __eq__(self, other):
        o = self._coerce(other) if not isinstance(other, PrimeFieldElement) else other
        if o is None:
            return NotImplemented
        return self.modulus == o.modulus and self.residue == o.residue

    def __hash__(self):
        return hash((self.modulus, self.residue))

    def order(self) -> int:
        return multiplicative_order(self.residue, self.modulus)

    def __int__(self):
        return self.residue

    def __str__(self):
        return str(self.residue)

    def __repr__(self):
        return f"{self.residue} (mod {self.modulus})"
