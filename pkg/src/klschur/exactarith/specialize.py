"""Ring maps out of A = Z[v, v^-1] (and partially out of Q(v)).

Two families of targets:

* :class:`PrimeFieldTarget` sends ``v`` to a unit ``t`` of F_l;
* :class:`CyclotomicTarget` sends ``v`` to ``zeta_m`` in Q[x]/Phi_m.

Rational coefficients and rational-function denominators are allowed as long
as their images are invertible; otherwise :class:`DenominatorVanishes`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..errors import DenominatorVanishes
from . import densepoly
from .cyclotomic import CyclotomicNumber, cyclotomic_polynomial
from .laurent import LaurentPoly
from .primefield import PrimeFieldElement, is_prime
from .ratfunc import RationalFunction


@dataclass(frozen=True)
class PrimeFieldTarget:
    modulus: int
    v_image: int

    def __post_init__(self):
        if not is_prime(self.modulus):
            raise ValueError(f"{self.modulus} is not prime")
        if self.v_image % self.modulus == 0:
            raise ValueError("the image of v must be a unit")

    def zero(self):
        return PrimeFieldElement(self.modulus, 0)


@dataclass(frozen=True)
class CyclotomicTarget:
    modulus: int

    def zero(self):
        return CyclotomicNumber(self.modulus)


def _laurent_to_prime(p: LaurentPoly, target: PrimeFieldTarget) -> PrimeFieldElement:
    ell = target.modulus
    t = target.v_image % ell
    tinv = pow(t, -1, ell)
    acc = 0
    for e, c in p:
        if isinstance(c, Fraction):
            den = c.denominator % ell
            if den == 0:
                raise DenominatorVanishes(f"coefficient {c} has denominator divisible by {ell}")
            c = c.numerator * pow(den, -1, ell)
        acc += c * (pow(t, e, ell) if e >= 0 else pow(tinv, -e, ell))
    return PrimeFieldElement(ell, acc % ell)


def _laurent_to_cyclotomic(p: LaurentPoly, target: CyclotomicTarget) -> CyclotomicNumber:
    m = target.modulus
    dense = [0] * m
    for e, c in p:
        dense[e % m] += c
    return CyclotomicNumber(m, dense)


def specialize(p, target):
    """Apply the ring map given by ``target`` to a Laurent polynomial or rational function.

    >>> v = LaurentPoly.v()
    >>> specialize(v + v**-1, PrimeFieldTarget(5, 2))
    0 (mod 5)
    """
    if isinstance(p, (int, Fraction)):
        p = LaurentPoly(p)
    if isinstance(p, RationalFunction):
        num = specialize(p.num, target)
        den = specialize(p.den, target)
        if den.is_zero():
            raise DenominatorVanishes(f"denominator of {p} vanishes under {target}")
        return num / den
    if isinstance(target, PrimeFieldTarget):
        return _laurent_to_prime(p, target)
    if isinstance(target, CyclotomicTarget):
        return _laurent_to_cyclotomic(p, target)
    raise TypeError(f"unknown specialization target {target!r}")


def cyclotomic_to_prime(z: CyclotomicNumber, ell: int, root: int) -> PrimeFieldElement:
    """The map Q(zeta_m) ⊇ Z[zeta_m] -> F_l sending zeta_m to a root of Phi_m mod l."""
    phi = cyclotomic_polynomial(z.modulus)
    if densepoly.evaluate(phi, root) % ell != 0:
        raise ValueError(f"{root} is not a root of Phi_{z.modulus} modulo {ell}")
    acc = PrimeFieldElement(ell, 0)
    for i, c in enumerate(z.coords):
        if c:
            acc = acc + PrimeFieldElement(ell, c) * pow(root, i, ell)
    return acc
