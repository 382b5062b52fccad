"""Laurent polynomials in two indeterminates ``v`` and ``v'``.

Only the operations needed for the two-parameter associativity identities
are provided: ring arithmetic, embedding a one-variable polynomial in either
variable, and the diagonal substitution ``v' := v``.
"""

from __future__ import annotations

from .laurent import LaurentPoly


class BivariatePoly:
    __slots__ = ("_c",)

    def __init__(self, terms=()):
        items = terms.items() if isinstance(terms, dict) else terms
        d: dict[tuple[int, int], int] = {}
        for (i, j), c in items:
            d[(i, j)] = d.get((i, j), 0) + c
        self._c = {k: c for k, c in d.items() if c != 0}

    @classmethod
    def _raw(cls, d):
        obj = cls.__new__(cls)
        obj._c = d
        return obj

    @classmethod
    def in_v(cls, p: LaurentPoly) -> "BivariatePoly":
        return cls._raw({(e, 0): c for e, c in p})

    @classmethod
    def in_vprime(cls, p: LaurentPoly) -> "BivariatePoly":
        return cls._raw({(0, e): c for e, c in p})

    def is_zero(self) -> bool:
        return not self._c

    def __add__(self, other: "BivariatePoly") -> "BivariatePoly":
        d = dict(self._c)
        for k, c in other._c.items():
            s = d.get(k, 0) + c
            if s:
                d[k] = s
            else:
                d.pop(k, None)
        return BivariatePoly._raw(d)

    def __neg__(self):
        return BivariatePoly._raw({k: -c for k, c in self._c.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other: "BivariatePoly") -> "BivariatePoly":
        d: dict[tuple[int, int], int] = {}
        for (i1, j1), c1 in self._c.items():
            for (i2, j2), c2 in other._c.items():
                k = (i1 + i2, j1 + j2)
                d[k] = d.get(k, 0) + c1 * c2
        return BivariatePoly._raw({k: c for k, c in d.items() if c != 0})

    def __eq__(self, other):
        if not isinstance(other, BivariatePoly):
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    def diagonal(self) -> LaurentPoly:
        """Substitute ``v' := v``."""
        return LaurentPoly((i + j, c) for (i, j), c in self._c.items())

    def __str__(self):
        if not self._c:
            return "0"
        return " + ".join(f"{c}*v^{i}*v'^{j}" for (i, j), c in sorted(self._c.items()))

    __repr__ = __str__


def mixed_product(p: LaurentPoly, q: LaurentPoly) -> BivariatePoly:
    """``p(v') * q(v)`` as a bivariate polynomial."""
    return BivariatePoly._raw({(eq, ep): cp * cq for ep, cp in p for eq, cq in q})
