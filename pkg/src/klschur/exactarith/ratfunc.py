"""Rational functions in ``v``: the field K = Q(v).

Canonical form: ``num / den`` where ``den`` is a primitive integer
polynomial with positive leading coefficient and non-zero constant term,
coprime to ``num``.  All powers of ``v`` and all rational scalars live in
the numerator, so structural equality is equality of functions.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm

from . import densepoly
from .laurent import LaurentPoly, _norm


def _to_int_poly(p: LaurentPoly) -> tuple[int, Fraction, list[int]]:
    """Write p = scalar * v**low * P(v), P primitive in Z[v] with P(0) != 0."""
    low, coeffs = p.to_dense()
    den = 1
    for c in coeffs:
        if isinstance(c, Fraction):
            den = lcm(den, c.denominator)
    ints = [int(c * den) for c in coeffs]
    g = densepoly.content(ints)
    if ints[-1] < 0:
        g = -g
    return low, Fraction(g, den), [c // g for c in ints]


class RationalFunction:
    __slots__ = ("num", "den", "_hash")

    def __init__(self, num=0, den=1):
        if not isinstance(num, LaurentPoly):
            num = LaurentPoly(num)
        if not isinstance(den, LaurentPoly):
            den = LaurentPoly(den)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        self._hash = None
        if num.is_zero():
            self.num, self.den = num, LaurentPoly(1)
            return
        if den.is_monomial():
            (e, c), = den._c.items()
            self.num, self.den = num.shift(-e).scale(Fraction(1) / Fraction(c)), LaurentPoly(1)
            return
        ln, sn, pn = _to_int_poly(num)
        ld, sd, pd = _to_int_poly(den)
        if len(pd) > 1:
            g = densepoly.gcd_int(pn, pd)
            if len(g) > 1:
                pn = densepoly.exact_quo_int(pn, g)
                pd = densepoly.exact_quo_int(pd, g)
                # quotients of primitive polys stay primitive up to sign
                if pd[-1] < 0:
                    pn = [-c for c in pn]
                    pd = [-c for c in pd]
        scalar = sn / sd
        if len(pd) == 1:
            scalar /= pd[0]
            pd = [1]
        self.num = LaurentPoly.from_dense(ln - ld, [_norm(c * scalar) for c in pn])
        self.den = LaurentPoly.from_dense(0, pd)

    @classmethod
    def _raw(cls, num: LaurentPoly, den: LaurentPoly) -> "RationalFunction":
        obj = cls.__new__(cls)
        obj.num, obj.den, obj._hash = num, den, None
        return obj

    @classmethod
    def coerce(cls, x) -> "RationalFunction":
        if isinstance(x, RationalFunction):
            return x
        if isinstance(x, LaurentPoly):
            return cls._raw(x, LaurentPoly(1))
        if isinstance(x, (int, Fraction)):
            return cls._raw(LaurentPoly(x), LaurentPoly(1))
        raise TypeError(f"cannot coerce {x!r} to a rational function")

    @staticmethod
    def _try(x):
        if isinstance(x, (RationalFunction, LaurentPoly, int, Fraction)):
            return RationalFunction.coerce(x)
        return None

    def is_polynomial(self) -> bool:
        return self.den.is_constant()

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self):
        return not self.num.is_zero()

    def is_in_A(self) -> bool:
        return self.is_polynomial() and self.num.is_in_A()

    def as_laurent(self) -> LaurentPoly:
        if not self.is_polynomial():
            raise ValueError(f"{self} is not a Laurent polynomial")
        return self.num

    def __add__(self, other):
        o = self._try(other)
        if o is None:
            return NotImplemented
        if self.den == o.den:
            if self.is_polynomial():
                return RationalFunction._raw(self.num + o.num, self.den)
            return RationalFunction(self.num + o.num, self.den)
        return RationalFunction(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction._raw(-self.num, self.den)

    def __sub__(self, other):
        o = self._try(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._try(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._try(other)
        if o is None:
            return NotImplemented
        if self.is_polynomial() and o.is_polynomial():
            return RationalFunction._raw(self.num * o.num, self.den)
        return RationalFunction(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def inverse(self) -> "RationalFunction":
        if self.num.is_zero():
            raise ZeroDivisionError("inverse of zero rational function")
        return RationalFunction(self.den, self.num)

    def __truediv__(self, other):
        o = self._try(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._try(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** -k
        out = RationalFunction.coerce(1)
        for _ in range(k):
            out = out * self
        return out

    def bar(self) -> "RationalFunction":
        return RationalFunction(self.num.bar(), self.den.bar())

    def __eq__(self, other):
        o = self._try(other)
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        if self._hash is None:
            # equal values must hash alike across LaurentPoly and RationalFunction
            self._hash = hash(self.num) if self.is_polynomial() else hash((self.num, self.den))
        return self._hash

    def __str__(self):
        if self.is_polynomial():
            return str(self.num)
        return f"({self.num})/({self.den})"

    __repr__ = __str__

    def to_json(self) -> dict:
        return {"num": self.num.to_json(), "den": self.den.to_json()}

    @classmethod
    def from_json(cls, obj: dict) -> "RationalFunction":
        return cls(LaurentPoly.from_json(obj["num"]), LaurentPoly.from_json(obj["den"]))

    def to_string(self) -> str:
        """The ``"num/den"`` rendering used in serialized matrices."""
        return f"{self.num}/{self.den}"


def as_ratfunc(x) -> RationalFunction:
    return RationalFunction.coerce(x)
