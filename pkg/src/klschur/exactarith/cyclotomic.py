"""Elements of the cyclotomic field Q(zeta_m) = Q[x]/Phi_m(x).

Dense coordinate vectors of length phi(m) with respect to the power basis
1, x, ..., x^(phi(m)-1).  Inversion is extended Euclid against Phi_m.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from . import densepoly


@lru_cache(maxsize=None)
def _cyclotomic(m: int) -> tuple[int, ...]:
    if m < 1:
        raise ValueError("cyclotomic polynomial index must be positive")
    num = [-1] + [0] * (m - 1) + [1]
    for d in range(1, m):
        if m % d == 0:
            num = densepoly.exact_quo_int(num, list(_cyclotomic(d)))
    return tuple(num)


def cyclotomic_polynomial(m: int) -> list[int]:
    """Phi_m as integer coefficients, lowest degree first.

    >>> cyclotomic_polynomial(6)
    [1, -1, 1]
    """
    return list(_cyclotomic(m))


def _reduce(coeffs, m: int) -> tuple:
    phi = _cyclotomic(m)
    _, rem = densepoly.divmod_field(coeffs, phi)
    deg = len(phi) - 1
    out = [Fraction(0)] * deg
    for i, c in enumerate(rem):
        out[i] = Fraction(c)
    return tuple(out)


class CyclotomicNumber:
    __slots__ = ("modulus", "coords")

    def __init__(self, modulus: int, coeffs=()):
        self.modulus = modulus
        self.coords = _reduce(list(coeffs), modulus)

    @classmethod
    def _raw(cls, modulus, coords):
        obj = cls.__new__(cls)
        obj.modulus = modulus
        obj.coords = coords
        return obj

    @classmethod
    def zeta(cls, m: int) -> "CyclotomicNumber":
        return cls(m, [0, 1])

    @classmethod
    def scalar(cls, m: int, c) -> "CyclotomicNumber":
        return cls(m, [c])

    @property
    def degree(self) -> int:
        return len(self.coords)

    def is_zero(self) -> bool:
        return not any(self.coords)

    def __bool__(self):
        return not self.is_zero()

    def _coerce(self, other):
        if isinstance(other, CyclotomicNumber):
            if other.modulus != self.modulus:
                raise ValueError("mixing different cyclotomic fields")
            return other
        if isinstance(other, (int, Fraction)):
            return CyclotomicNumber.scalar(self.modulus, other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CyclotomicNumber._raw(self.modulus, tuple(a + b for a, b in zip(self.coords, o.coords)))

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicNumber._raw(self.modulus, tuple(-a for a in self.coords))

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
        return CyclotomicNumber(self.modulus, densepoly.mul(self.coords, o.coords))

    __rmul__ = __mul__

    def inverse(self) -> "CyclotomicNumber":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in a cyclotomic field")
        g, s, _ = densepoly.xgcd_field(densepoly.trim(self.coords), list(_cyclotomic(self.modulus)))
        if g != [1]:
            raise ArithmeticError("cyclotomic polynomial is not irreducible?")
        return CyclotomicNumber(self.modulus, s)

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
        out = CyclotomicNumber.scalar(self.modulus, 1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        o = self._coerce(other) if not isinstance(other, CyclotomicNumber) else other
        if o is None:
            return NotImplemented
        return self.modulus == o.modulus and self.coords == o.coords

    def __hash__(self):
        return hash((self.modulus, self.coords))

    def is_integral(self) -> bool:
        """True when all power-basis coordinates are integers (i.e. in Z[zeta_m])."""
        return all(c.denominator == 1 for c in self.coords)

    def __str__(self):
        terms = []
        for i, c in enumerate(self.coords):
            if c == 0:
                continue
            mono = "" if i == 0 else ("z" if i == 1 else f"z^{i}")
            if not mono:
                terms.append(str(c))
            elif c == 1:
                terms.append(mono)
            else:
                terms.append(f"{c}*{mono}")
        return " + ".join(terms) if terms else "0"

    __repr__ = __str__
