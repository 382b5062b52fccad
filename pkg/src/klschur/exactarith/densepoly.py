"""Dense univariate polynomials as coefficient lists, lowest degree first.

These are the internal workhorse for gcds (rational-function normalization)
and for reduction modulo cyclotomic polynomials.  Coefficients are Python
ints or ``Fraction``; the empty list is the zero polynomial.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Sequence

Poly = list


def trim(p: Sequence) -> Poly:
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def add(p: Sequence, q: Sequence) -> Poly:
    if len(p) < len(q):
        p, q = q, p
    out = list(p)
    for i, c in enumerate(q):
        out[i] += c
    return trim(out)


def sub(p: Sequence, q: Sequence) -> Poly:
    return add(p, [-c for c in q])


def mul(p: Sequence, q: Sequence) -> Poly:
    if not p or not q:
        return []
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a == 0:
            continue
        for j, b in enumerate(q):
            out[i + j] += a * b
    return trim(out)


def divmod_field(p: Sequence, q: Sequence) -> tuple[Poly, Poly]:
    """Quotient and remainder over the rationals."""
    q = trim(q)
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    r = [Fraction(c) for c in trim(p)]
    lead = Fraction(q[-1])
    dq = len(q) - 1
    if len(r) - 1 < dq:
        return [], trim(_demote(r))
    quot = [Fraction(0)] * (len(r) - dq)
    for k in range(len(r) - 1, dq - 1, -1):
        c = r[k]
        if c == 0:
            continue
        c = c / lead
        quot[k - dq] = c
        for j, b in enumerate(q):
            r[k - dq + j] -= c * b
    return trim(_demote(quot)), trim(_demote(r[:dq]))


def _demote(coeffs):
    return [c.numerator if isinstance(c, Fraction) and c.denominator == 1 else c
            for c in coeffs]


def content(p: Sequence[int]) -> int:
    g = 0
    for c in p:
        g = gcd(g, c)
    return g


def primitive(p: Sequence[int]) -> Poly:
    """Primitive part with positive leading coefficient."""
    p = trim(p)
    if not p:
        return []
    g = content(p)
    if p[-1] < 0:
        g = -g
    return [c // g for c in p]


def pseudo_rem(p: Sequence[int], q: Sequence[int]) -> Poly:
    r = list(p)
    dq = len(q) - 1
    lq = q[-1]
    while r and len(r) - 1 >= dq:
        lr = r[-1]
        shift = len(r) - 1 - dq
        r = [c * lq for c in r]
        for j, b in enumerate(q):
            r[shift + j] -= lr * b
        r = trim(r)
    return r


def gcd_int(p: Sequence[int], q: Sequence[int]) -> Poly:
    """Primitive gcd in Z[x] (primitive pseudo-remainder sequence)."""
    a, b = primitive(p), primitive(q)
    if not a:
        return b
    if not b:
        return a
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = pseudo_rem(a, b)
        a, b = b, primitive(r)
    return primitive(a)


def exact_quo_int(p: Sequence[int], q: Sequence[int]) -> Poly:
    """p / q in Z[x]; caller guarantees exactness."""
    quot, rem = divmod_field(p, q)
    if rem:
        raise ArithmeticError("inexact polynomial quotient")
    return [int(c) for c in quot]


def xgcd_field(p: Sequence, q: Sequence) -> tuple[Poly, Poly, Poly]:
    """Return (g, s, t) with s*p + t*q = g, g monic, over the rationals."""
    r0, r1 = trim(p), trim(q)
    s0, s1 = [1], []
    t0, t1 = [], [1]
    while r1:
        quot, rem = divmod_field(r0, r1)
        r0, r1 = r1, rem
        s0, s1 = s1, sub(s0, mul(quot, s1))
        t0, t1 = t1, sub(t0, mul(quot, t1))
    if not r0:
        return [], s0, t0
    lead = Fraction(r0[-1])
    inv = [1 / lead]
    return (trim(_demote(mul(r0, inv))), trim(_demote(mul(s0, inv))),
            trim(_demote(mul(t0, inv))))


def evaluate(p: Sequence, x):
    acc = 0
    for c in reversed(p):
        acc = acc * x + c
    return acc
