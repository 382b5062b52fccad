"""The asymptotic algebra J(n, r) and the homomorphism Phi from S_q(n, r).

J(n, r) is free over Z on symbols t_a, a in M(n, r), with
``t_a t_b = sum_c gamma_{a,b,c^t} t_c``.  Coefficients are stored as
LaurentPoly so the same element type serves J and its base change J_A.

``Phi(theta_a) = sum_b f_{a,d(b),b} t_b`` where d(b) is the distinguished
element in the left cell of b.
"""

from __future__ import annotations

from functools import cached_property
from typing import Iterable

from . import linalg
from ._hecke_checks import _report
from .celltrace import TraceForm, WedderburnData
from .errors import IdentityCheckFailed
from .exactarith import LaurentPoly
from .hecke import Report, _axpy
from .qschur import QSchurAlgebra, QSchurElement, _clean

ZERO = LaurentPoly()
ONE = LaurentPoly(1)


class AsymptoticElement:
    """An element sum_a coords[a] t_a of J(n, r) (or of J after base change)."""

    __slots__ = ("algebra", "coords")

    def __init__(self, algebra: "AsymptoticAlgebra", coords: dict):
        self.algebra = algebra
        self.coords = {k: _clean(c) for k, c in coords.items() if c}

    @classmethod
    def t(cls, algebra: "AsymptoticAlgebra", a) -> "AsymptoticElement":
        return cls(algebra, {algebra.schur._k(a): ONE})

    def __add__(self, other: "AsymptoticElement") -> "AsymptoticElement":
        out = dict(self.coords)
        _axpy(out, ONE, other.coords)
        return AsymptoticElement(self.algebra, out)

    def __sub__(self, other: "AsymptoticElement") -> "AsymptoticElement":
        return self + other * -1

    def __mul__(self, other):
        if isinstance(other, AsymptoticElement):
            return self.algebra.multiply(self, other)
        return AsymptoticElement(self.algebra, {k: c * other for k, c in self.coords.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, AsymptoticElement) and self.coords == other.coords

    def __hash__(self):
        return hash(frozenset(self.coords.items()))

    def is_zero(self) -> bool:
        return not self.coords

    def is_integral(self) -> bool:
        """All coefficients are integers (degree-zero constants)."""
        return all(isinstance(c, LaurentPoly) and set(e for e, _ in c) <= {0}
                   for c in self.coords.values())

    def coefficient(self, a):
        return self.coords.get(self.algebra.schur._k(a), ZERO)

    def to_json(self) -> dict:
        S = self.algebra.schur
        return {S.indices[k].label(): str(c) for k, c in sorted(self.coords.items())}

    def __repr__(self):
        S = self.algebra.schur
        terms = [f"({c})*t[{S.indices[k].label()}]" for k, c in sorted(self.coords.items())]
        return " + ".join(terms) or "0"


class AsymptoticAlgebra:
    def __init__(self, schur: QSchurAlgebra):
        self.schur = S = schur
        self.size = S.size
        table: dict[tuple[int, int], dict[int, int]] = {}
        for (a, b, ct), k in S.gammas.items():
            table.setdefault((a, b), {})[S.tr[ct]] = k
        self.table = table
        left, _, _ = S.cells_idx()
        self._left = left
        self.d_of = [S.distinguished_in_cell(k) for k in range(S.size)]
        self._check_identity()

    def t(self, a) -> AsymptoticElement:
        return AsymptoticElement.t(self, a)

    def t_product(self, a: int, b: int) -> dict[int, int]:
        return self.table.get((a, b), {})

    def multiply(self, x: AsymptoticElement, y: AsymptoticElement) -> AsymptoticElement:
        out: dict = {}
        for a, ca in x.coords.items():
            for b, cb in y.coords.items():
                prod = self.table.get((a, b))
                if prod:
                    coef = ca * cb
                    for c, k in prod.items():
                        term = coef * k
                        out[c] = out[c] + term if c in out else term
        return AsymptoticElement(self, out)

    def identity(self) -> AsymptoticElement:
        return AsymptoticElement(self, {d: ONE for d in self.schur.distinguished_idx})

    def _check_identity(self) -> None:
        one = self.identity()
        for a in range(self.size):
            ta = AsymptoticElement(self, {a: ONE})
            if one * ta != ta or ta * one != ta:
                raise IdentityCheckFailed(
                    f"sum of t_d is not neutral on t[{self.schur.indices[a].label()}]")

    # -- Phi ----------------------------------------------------------------

    def phi_theta(self, a: int) -> AsymptoticElement:
        """Phi(theta_a), summing over b and looking up d(b)."""
        S = self.schur
        out = {}
        for b in range(self.size):
            f = S.product_idx(a, self.d_of[b]).get(b)
            if f:
                out[b] = f
        return AsymptoticElement(self, out)

    def phi_theta_by_cells(self, a: int) -> AsymptoticElement:
        """Phi(theta_a), summing over d in D(n, r) and filtering products to the cell of d."""
        S = self.schur
        out = {}
        for d in S.distinguished_idx:
            for b, f in S.product_idx(a, d).items():
                if self._left.equiv(b, d):
                    out[b] = f
        return AsymptoticElement(self, out)

    @cached_property
    def _phi_cache(self) -> list[AsymptoticElement]:
        return [self.phi_theta(a) for a in range(self.size)]

    def phi(self, x: QSchurElement) -> AsymptoticElement:
        out: dict = {}
        for a, c in x.coords.items():
            _axpy(out, c, self._phi_cache[a].coords)
        return AsymptoticElement(self, out)

    @cached_property
    def phi_matrix(self) -> list[list]:
        """Rows indexed by the t-basis, columns by the theta-basis."""
        n = self.size
        P = [[ZERO] * n for _ in range(n)]
        for a, img in enumerate(self._phi_cache):
            for b, c in img.coords.items():
                P[b][a] = c
        return P

    def verify(self) -> list[Report]:
        return verify_asymptotic(self)


def j_multiply(x: AsymptoticElement, y: AsymptoticElement) -> AsymptoticElement:
    return x.algebra.multiply(x, y)


def j_identity(J: AsymptoticAlgebra) -> AsymptoticElement:
    return J.identity()


def phi(J: AsymptoticAlgebra, x: QSchurElement) -> AsymptoticElement:
    return J.phi(x)


def verify_asymptotic(J: AsymptoticAlgebra) -> list[Report]:
    S = J.schur
    N = range(J.size)
    t = [AsymptoticElement(J, {a: ONE}) for a in N]
    theta = [QSchurElement.theta(S, a) for a in N]

    def labs(*ks):
        return {"indices": [S.indices[k].label() for k in ks]}

    reports: list[Report] = []
    add = reports.append

    def assoc(pair):
        a, b = pair
        ab = t[a] * t[b]
        for c in N:
            if ab * t[c] != t[a] * (t[b] * t[c]):
                return False
        return True
    add(_report("J.associativity", ((a, b) for a in N for b in N), assoc, lambda p: labs(*p)))
    add(_report("J.products_are_basis_or_zero", ((a, b) for a in N for b in N),
                lambda p: len(J.t_product(*p)) <= 1 and all(k == 1 for k in J.t_product(*p).values()),
                lambda p: labs(*p)))
    one = J.identity()
    add(_report("J.identity", N, lambda a: one * t[a] == t[a] == t[a] * one,
                lambda a: labs(a)))
    add(_report("J.idempotent_distinguished", S.distinguished_idx,
                lambda d: t[d] * t[d] == t[d], lambda d: labs(d)))

    add(_report("phi.two_code_paths", N, lambda a: J.phi_theta(a) == J.phi_theta_by_cells(a),
                lambda a: labs(a)))
    add(_report("phi.integrality", N,
                lambda a: all(c.is_in_A() for c in J.phi_theta(a).coords.values()),
                lambda a: labs(a)))
    add(_report("phi.unital", [S.identity()], lambda u: J.phi(u) == one, lambda _: {}))
    add(_report("phi.homomorphism", ((a, b) for a in N for b in N),
                lambda p: J.phi(theta[p[0]] * theta[p[1]]) == J.phi(theta[p[0]]) * J.phi(theta[p[1]]),
                lambda p: labs(*p)))
    det = linalg.det(J.phi_matrix)
    add(Report("phi.invertible", bool(det), 1, None if det else {"det": str(det)}))
    return reports


def phi_preimage_check(J: AsymptoticAlgebra, forms: Iterable[TraceForm]) -> list[Report]:
    """Phi(B_c) = t_c, the B-structure constants match J, and the images agree across forms."""
    S = J.schur
    N = range(J.size)
    t = [AsymptoticElement(J, {a: ONE}) for a in N]
    reports: list[Report] = []
    images: list[list[AsymptoticElement]] = []

    def labs(*ks):
        return {"indices": [S.indices[k].label() for k in ks]}

    for i, form in enumerate(forms):
        W = WedderburnData(form)
        tag = f"form{i}"
        img = [J.phi(W.basis[c]) for c in N]
        images.append(img)
        reports.append(_report(f"preimages.{tag}", N, lambda c: img[c] == t[c], lambda c: labs(c)))

        def in_B(x: QSchurElement) -> dict:
            out: dict = {}
            for a, xa in x.coords.items():
                for c, m in enumerate(W.M[a]):
                    if m:
                        out[c] = out[c] + xa * m if c in out else xa * m
            return {c: _clean(v) for c, v in out.items() if v}

        def structure_matches(pair):
            c, c2 = pair
            got = in_B(W.basis[c] * W.basis[c2])
            want = {k: LaurentPoly(v) for k, v in J.t_product(c, c2).items()}
            return got == want
        reports.append(_report(f"newinter.structure_constants.{tag}",
                               ((c, c2) for c in N for c2 in N), structure_matches, lambda p: labs(*p)))

        def square_commutes(a):
            want = AsymptoticElement(J, {c: W.M[a][c] for c in N if W.M[a][c]})
            return J.phi_theta(a) == want
        reports.append(_report(f"newinter.square_commutes.{tag}", N, square_commutes,
                               lambda a: labs(a)))
    if len(images) > 1:
        reports.append(_report("preimages.trace_form_independent", N,
                               lambda c: all(img[c] == images[0][c] for img in images),
                               lambda c: labs(c)))
    return reports


def default_forms(S: QSchurAlgebra) -> list[TraceForm]:
    """c_chi = 1 for all classes, and a second form with c_chi = 2, v, v^2+1, ... ."""
    base = TraceForm(S)
    k = len(base.classes)
    choices = ["2", "v", "v^2+1", "3*v^-1", "v+v^-1", "5"]
    return [base, TraceForm(S, [choices[i % len(choices)] for i in range(k)])]


__all__ = [
    "AsymptoticElement", "AsymptoticAlgebra", "j_multiply", "j_identity", "phi",
    "verify_asymptotic", "phi_preimage_check", "default_forms",
]
