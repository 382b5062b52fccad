"""Laurent polynomials in ``v`` with exact rational coefficients.

The ring A = Z[v, v^-1] sits inside as the polynomials whose coefficients
are all integers (:meth:`LaurentPoly.is_in_A`).  Values are immutable and
hashable; integral coefficients are stored as ``int`` so that the common
case never touches ``Fraction``.

>>> v = LaurentPoly.v()
>>> (v + v**-1) * (v - v**-1)
-v^-2 + v^2
>>> (v**2 - v**-2).exact_divide(v - v**-1)
v^-1 + v
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Iterable, Mapping

from ..errors import NotDivisible
from . import densepoly

# exponents stay far below this at every size the package supports
MAX_EXPONENT = 10_000


def _norm(c):
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    if isinstance(c, int):
        return c
    if isinstance(c, Rational):
        c = Fraction(c)
        return c.numerator if c.denominator == 1 else c
    raise TypeError(f"unsupported coefficient {c!r}")


class LaurentPoly:
    __slots__ = ("_c", "_hash")

    def __init__(self, terms: Mapping[int, object] | Iterable | int | Fraction = ()):
        if isinstance(terms, (int, Fraction)):
            c = _norm(terms)
            self._c = {0: c} if c else {}
        else:
            items = terms.items() if isinstance(terms, Mapping) else terms
            d: dict[int, object] = {}
            for e, c in items:
                e = int(e)
                d[e] = d.get(e, 0) + _norm(c)
            self._c = {e: _norm(c) for e, c in d.items() if c != 0}
        self._hash = None

    @classmethod
    def _raw(cls, d: dict) -> "LaurentPoly":
        obj = cls.__new__(cls)
        obj._c = d
        obj._hash = None
        return obj

    @classmethod
    def v(cls, k: int = 1) -> "LaurentPoly":
        return cls._raw({k: 1})

    @classmethod
    def monomial(cls, k: int, c=1) -> "LaurentPoly":
        c = _norm(c)
        return cls._raw({k: c} if c else {})

    # -- inspection ---------------------------------------------------------

    @property
    def terms(self) -> tuple[tuple[int, object], ...]:
        return tuple(sorted(self._c.items()))

    def __iter__(self):
        return iter(sorted(self._c.items()))

    def coefficient(self, k: int):
        return self._c.get(k, 0)

    def is_zero(self) -> bool:
        return not self._c

    def __bool__(self) -> bool:
        return bool(self._c)

    @property
    def degree(self) -> int:
        """Top exponent; raises on the zero polynomial."""
        if not self._c:
            raise ValueError("degree of zero Laurent polynomial")
        return max(self._c)

    @property
    def low_degree(self) -> int:
        if not self._c:
            raise ValueError("low degree of zero Laurent polynomial")
        return min(self._c)

    def is_constant(self) -> bool:
        return not self._c or (len(self._c) == 1 and 0 in self._c)

    def constant(self):
        return self._c.get(0, 0)

    def is_in_A(self) -> bool:
        return all(isinstance(c, int) for c in self._c.values())

    def is_monomial(self) -> bool:
        return len(self._c) == 1

    # -- arithmetic ---------------------------------------------------------

    @staticmethod
    def _coerce(other):
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, (int, Fraction)):
            c = _norm(other)
            return LaurentPoly._raw({0: c} if c else {})
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if len(self._c) < len(o._c):
            a, b = o._c, self._c
        else:
            a, b = self._c, o._c
        d = dict(a)
        for e, c in b.items():
            s = d.get(e, 0) + c
            if s:
                d[e] = _norm(s)
            else:
                d.pop(e, None)
        return LaurentPoly._raw(d)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw({e: -c for e, c in self._c.items()})

    def __pos__(self):
        return self

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
        if not self._c or not o._c:
            return LaurentPoly._raw({})
        d: dict[int, object] = {}
        for e1, c1 in self._c.items():
            for e2, c2 in o._c.items():
                e = e1 + e2
                d[e] = d.get(e, 0) + c1 * c2
        return LaurentPoly._raw({e: _norm(c) for e, c in d.items() if c != 0})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            if len(self._c) != 1:
                raise NotDivisible("only monomials are units in the Laurent ring")
            (e, c), = self._c.items()
            return LaurentPoly._raw({-e * -k: _norm(Fraction(1, 1) / c ** -k)})
        out = LaurentPoly._raw({0: 1})
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by ``v**k``."""
        return LaurentPoly._raw({e + k: c for e, c in self._c.items()})

    def scale(self, c) -> "LaurentPoly":
        c = _norm(c)
        if not c:
            return LaurentPoly._raw({})
        return LaurentPoly._raw({e: _norm(x * c) for e, x in self._c.items()})

    def bar(self) -> "LaurentPoly":
        return LaurentPoly._raw({-e: c for e, c in self._c.items()})

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._c == o._c

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._c.items()))
        return self._hash

    # -- dense conversion and division -------------------------------------

    def to_dense(self) -> tuple[int, list]:
        """(low exponent, coefficients) so that self = v**low * sum c_i v**i."""
        if not self._c:
            return 0, []
        lo, hi = min(self._c), max(self._c)
        coeffs = [0] * (hi - lo + 1)
        for e, c in self._c.items():
            coeffs[e - lo] = c
        return lo, coeffs

    @classmethod
    def from_dense(cls, low: int, coeffs) -> "LaurentPoly":
        return cls._raw({low + i: _norm(c) for i, c in enumerate(coeffs) if c != 0})

    def exact_divide(self, other: "LaurentPoly") -> "LaurentPoly":
        o = self._coerce(other)
        if o is None or not o._c:
            raise NotDivisible("division by zero")
        if not self._c:
            return self
        if len(o._c) == 1:
            (e, c), = o._c.items()
            inv = Fraction(1) / Fraction(c)
            return LaurentPoly._raw({x - e: _norm(y * inv) for x, y in self._c.items()})
        la, a = self.to_dense()
        lb, b = o.to_dense()
        quot, rem = densepoly.divmod_field(a, b)
        if rem:
            raise NotDivisible(f"{self} is not divisible by {o}")
        return LaurentPoly.from_dense(la - lb, quot)

    def __truediv__(self, other):
        from .ratfunc import RationalFunction
        if isinstance(other, (int, Fraction)):
            return self.scale(Fraction(1) / Fraction(other))
        if isinstance(other, LaurentPoly):
            return RationalFunction(self, other)
        return NotImplemented

    def __rtruediv__(self, other):
        from .ratfunc import RationalFunction
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RationalFunction(o, self)

    def evaluate(self, x, one=1):
        """Evaluate at an invertible ring element ``x``.

        ``x`` must support ``*``, ``+`` and ``**`` with negative exponents.
        """
        acc = None
        for e, c in self._c.items():
            term = (x ** e) * c
            acc = term if acc is None else acc + term
        return acc if acc is not None else one * 0

    # -- rendering ----------------------------------------------------------

    def __str__(self):
        if not self._c:
            return "0"
        parts = []
        for e, c in sorted(self._c.items()):
            neg = c < 0
            a = -c if neg else c
            if e == 0:
                body = str(a)
            else:
                mono = "v" if e == 1 else f"v^{e}"
                if a == 1:
                    body = mono
                elif isinstance(a, Fraction):
                    body = f"({a})*{mono}"
                else:
                    body = f"{a}*{mono}"
            if not parts:
                parts.append(f"-{body}" if neg else body)
            else:
                parts.append(f"- {body}" if neg else f"+ {body}")
        return " ".join(parts)

    def __repr__(self):
        return str(self)

    def to_json(self) -> dict:
        return {"terms": [[e, str(c)] for e, c in sorted(self._c.items())]}

    @classmethod
    def from_json(cls, obj: dict) -> "LaurentPoly":
        return cls((int(e), Fraction(c)) for e, c in obj["terms"])


ZERO = LaurentPoly()
ONE = LaurentPoly(1)
V = LaurentPoly.v()


def bar(p: LaurentPoly) -> LaurentPoly:
    return p.bar()


def exact_divide(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    return a.exact_divide(b)
