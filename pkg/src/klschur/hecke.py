"""The generic Iwahori-Hecke algebra of S_r over A = Z[v, v^-1].

Normalization: ``(T_s - v)(T_s + v^-1) = 0``, so ``T_s^2 = 1 + (v - v^-1) T_s``.
The Kazhdan-Lusztig basis ``C_w = sum_{y <= w} p_{y,w} T_y`` is bar-invariant
with ``p_{w,w} = 1`` and ``p_{y,w}`` in ``v^-1 Z[v^-1]`` for ``y < w``.

Internally elements of W are addressed by their position in
:func:`klschur.weyl.all_permutations`; the public methods take
:class:`~klschur.weyl.Permutation` objects.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterator

from .exactarith import LaurentPoly, RationalFunction
from .exactarith.bivariate import BivariatePoly, mixed_product
from .preorder import Preorder
from .weyl import Permutation, all_permutations, bruhat_interval

V = LaurentPoly.v()
VINV = LaurentPoly.v(-1)
V_MINUS_VINV = V - VINV
QUANTUM_TWO = V + VINV

Vector = dict  # index -> LaurentPoly, zero entries never stored


def _axpy(acc: Vector, coef: LaurentPoly, vec: Vector) -> None:
    """acc += coef * vec, in place."""
    for k, c in vec.items():
        term = c * coef
        s = acc.get(k)
        if s is None:
            acc[k] = term
        else:
            s = s + term
            if s:
                acc[k] = s
            else:
                del acc[k]


@dataclass(frozen=True)
class Report:
    """Outcome of one named check."""
    property: str
    passed: bool
    checked: int = 0
    witness: dict | None = None

    @property
    def status(self) -> str:
        return "pass" if self.passed else "fail"

    def to_json(self) -> dict:
        out = {"property": self.property, "status": self.status, "checked": self.checked}
        if self.witness is not None:
            out["witness"] = self.witness
        return out


@dataclass
class CellData:
    left: Preorder
    right: Preorder
    two_sided: Preorder
    a_value: dict
    delta: dict
    distinguished: frozenset

    @property
    def left_cells(self):
        return self.left.classes

    @property
    def right_cells(self):
        return self.right.classes

    @property
    def two_sided_cells(self):
        return self.two_sided.classes


class HeckeElement:
    """An element of H stored in the T-basis; ``from_C`` converts on entry."""

    __slots__ = ("algebra", "coords")

    def __init__(self, algebra: "HeckeAlgebra", coords: Vector):
        self.algebra = algebra
        self.coords = {k: c for k, c in coords.items() if c}

    @classmethod
    def T(cls, algebra, w: Permutation) -> "HeckeElement":
        return cls(algebra, {algebra.index[w]: LaurentPoly(1)})

    @classmethod
    def C(cls, algebra, w: Permutation) -> "HeckeElement":
        return cls(algebra, dict(algebra._kl[algebra.index[w]]))

    def __add__(self, other):
        acc = dict(self.coords)
        _axpy(acc, LaurentPoly(1), other.coords)
        return HeckeElement(self.algebra, acc)

    def __sub__(self, other):
        acc = dict(self.coords)
        _axpy(acc, LaurentPoly(-1), other.coords)
        return HeckeElement(self.algebra, acc)

    def __mul__(self, other):
        if isinstance(other, HeckeElement):
            return HeckeElement(self.algebra, self.algebra._t_mul(self.coords, other.coords))
        return HeckeElement(self.algebra, {k: c * other for k, c in self.coords.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, HeckeElement) and self.coords == other.coords

    def tau(self):
        """Coefficient of T_e: the standard symmetrising form."""
        return self.coords.get(0, LaurentPoly())

    def bar(self) -> "HeckeElement":
        return HeckeElement(self.algebra, self.algebra._t_bar(self.coords))

    def in_C_basis(self) -> dict:
        alg = self.algebra
        return {alg.elements[k]: c for k, c in alg._t_to_c(self.coords).items()}

    def in_T_basis(self) -> dict:
        return {self.algebra.elements[k]: c for k, c in self.coords.items()}

    def __repr__(self):
        terms = [f"({c})*T[{self.algebra.elements[k].word_str()}]"
                 for k, c in sorted(self.coords.items())]
        return " + ".join(terms) or "0"


class HeckeAlgebra:
    """H(S_r) with its Kazhdan-Lusztig data, computed once at construction."""

    def __init__(self, r: int):
        if r < 1:
            raise ValueError("r must be positive")
        self.r = r
        self.elements: tuple[Permutation, ...] = all_permutations(r)
        self.index = {w: i for i, w in enumerate(self.elements)}
        self.size = len(self.elements)
        self.lengths = [w.length() for w in self.elements]
        self.inverse = [self.index[w.inverse()] for w in self.elements]
        gens = range(1, r)
        self.gens = list(gens)
        self.gen_index = {i: self.index[Permutation.simple(i, r)] for i in gens}
        self.lmul = {i: [self.index[w.left_mul_simple(i)] for w in self.elements] for i in gens}
        self.rmul = {i: [self.index[w.right_mul_simple(i)] for w in self.elements] for i in gens}
        self._kl: list[Vector] = []
        self._mu: dict[int, list[tuple[int, int]]] = {}
        self._compute_kl()

    # -- Kazhdan-Lusztig polynomials ----------------------------------------

    def _compute_kl(self) -> None:
        """Standard recursion: C_s C_{sw} = C_w + sum_{z < sw, sz < z} mu(z, sw) C_z."""
        lengths = self.lengths
        for w in range(self.size):
            if w == 0:
                self._kl.append({0: LaurentPoly(1)})
                self._mu[0] = []
                continue
            s = min(self.elements[w].left_descents())
            ws = self.lmul[s][w]
            prev = self._kl[ws]
            acc: Vector = {}
            for y, p in prev.items():
                sy = self.lmul[s][y]
                _axpy(acc, LaurentPoly(1), {sy: p})
                _axpy(acc, VINV if lengths[sy] > lengths[y] else V, {y: p})
            for z, m in self._mu[ws]:
                if lengths[self.lmul[s][z]] < lengths[z]:
                    _axpy(acc, LaurentPoly(-m), self._kl[z])
            self._kl.append(acc)
            mus = []
            for y, p in acc.items():
                if y != w:
                    m = p.coefficient(-1)
                    if m:
                        mus.append((y, m))
            self._mu[w] = sorted(mus)

    def kl_polynomial(self, y: Permutation, w: Permutation) -> LaurentPoly:
        return self._kl[self.index[w]].get(self.index[y], LaurentPoly())

    def mu(self, y: Permutation, w: Permutation) -> int:
        p = self.kl_polynomial(y, w)
        return p.coefficient(-1) if y != w else 0

    def C(self, w: Permutation) -> HeckeElement:
        return HeckeElement.C(self, w)

    def T(self, w: Permutation) -> HeckeElement:
        return HeckeElement.T(self, w)

    # -- T-basis arithmetic (used for independent checks) --------------------

    def _t_right_gen(self, vec: Vector, i: int) -> Vector:
        """vec * T_{s_i}."""
        out: Vector = {}
        rm, lengths = self.rmul[i], self.lengths
        for w, c in vec.items():
            ws = rm[w]
            _axpy(out, c, {ws: LaurentPoly(1)})
            if lengths[ws] < lengths[w]:
                _axpy(out, c, {w: V_MINUS_VINV})
        return out

    def _t_right_gen_inverse(self, vec: Vector, i: int) -> Vector:
        """vec * T_{s_i}^-1, using T_s^-1 = T_s - (v - v^-1)."""
        out = self._t_right_gen(vec, i)
        _axpy(out, -V_MINUS_VINV, vec)
        return out

    def _t_mul(self, x: Vector, y: Vector) -> Vector:
        out: Vector = {}
        for w, c in y.items():
            part = x
            for i in self.elements[w].reduced_word():
                part = self._t_right_gen(part, i)
            _axpy(out, c, part)
        return out

    @cached_property
    def _t_bar_images(self) -> list[Vector]:
        """bar(T_w) = T_{w^-1}^-1 in the T-basis."""
        out = []
        for w in self.elements:
            vec: Vector = {0: LaurentPoly(1)}
            for i in w.reduced_word():
                vec = self._t_right_gen_inverse(vec, i)
            out.append(vec)
        return out

    def _t_bar(self, vec: Vector) -> Vector:
        out: Vector = {}
        for w, c in vec.items():
            _axpy(out, c.bar(), self._t_bar_images[w])
        return out

    def _t_to_c(self, vec: Vector) -> Vector:
        """Triangular change of basis T -> C (peel the longest term)."""
        rest = dict(vec)
        out: Vector = {}
        while rest:
            w = max(rest)
            c = rest[w]
            out[w] = c
            _axpy(rest, -c, self._kl[w])
        return out

    def product_via_T(self, x: Permutation, y: Permutation) -> dict:
        """C_x C_y expanded through the T-basis; an independent route to g."""
        vec = self._t_mul(self._kl[self.index[x]], self._kl[self.index[y]])
        return {self.elements[z]: c for z, c in self._t_to_c(vec).items()}

    # -- structure constants ------------------------------------------------

    @cached_property
    def _left_gen_action(self) -> dict[int, list[Vector]]:
        """C_s C_w in the C-basis, for every generator s and every w."""
        out = {}
        lengths = self.lengths
        for i in self.gens:
            rows = []
            for w in range(self.size):
                sw = self.lmul[i][w]
                if lengths[sw] < lengths[w]:
                    rows.append({w: QUANTUM_TWO})
                else:
                    vec: Vector = {sw: LaurentPoly(1)}
                    for z, m in self._mu[w]:
                        if lengths[self.lmul[i][z]] < lengths[z]:
                            vec[z] = LaurentPoly(m)
                    rows.append(vec)
            out[i] = rows
        return out

    @cached_property
    def _g(self) -> list[list[Vector]]:
        """g[x][y] = C_x C_y in the C-basis, by recursion on l(x)."""
        act = self._left_gen_action
        table: list[list[Vector] | None] = [None] * self.size
        table[0] = [{y: LaurentPoly(1)} for y in range(self.size)]
        for x in range(1, self.size):
            s = min(self.elements[x].left_descents())
            xs = self.lmul[s][x]
            corrections = [(z, m) for z, m in self._mu[xs]
                           if self.lengths[self.lmul[s][z]] < self.lengths[z]]
            row = []
            for y in range(self.size):
                acc: Vector = {}
                for z, c in table[xs][y].items():
                    _axpy(acc, c, act[s][z])
                for z, m in corrections:
                    _axpy(acc, LaurentPoly(-m), table[z][y])
                row.append(acc)
            table[x] = row
        return table

    def product(self, x: Permutation, y: Permutation) -> dict:
        """C_x C_y as {z: g_{x,y,z}}."""
        vec = self._g[self.index[x]][self.index[y]]
        return {self.elements[z]: c for z, c in sorted(vec.items())}

    def g(self, x: Permutation, y: Permutation, z: Permutation) -> LaurentPoly:
        return self._g[self.index[x]][self.index[y]].get(self.index[z], LaurentPoly())

    def g_idx(self, x: int, y: int) -> Vector:
        return self._g[x][y]

    # -- a-function, Delta, gamma, D ----------------------------------------

    @cached_property
    def _a(self) -> list[int]:
        a = [None] * self.size
        for row in self._g:
            for vec in row:
                for z, c in vec.items():
                    d = c.degree
                    if a[z] is None or d > a[z]:
                        a[z] = d
        return a

    def a_function(self, z: Permutation) -> int:
        return self._a[self.index[z]]

    def a_idx(self, z: int) -> int:
        return self._a[z]

    @cached_property
    def _delta(self) -> list[int]:
        return [-self._kl[w][0].degree for w in range(self.size)]

    def delta(self, z: Permutation) -> int:
        return self._delta[self.index[z]]

    def gamma_idx(self, x: int, y: int, z: int) -> int:
        """gamma_{x,y,z}: coefficient of v^{a(z^-1)} in g_{x,y,z^-1}."""
        zi = self.inverse[z]
        c = self._g[x][y].get(zi)
        return c.coefficient(self._a[zi]) if c is not None else 0

    def gamma(self, x: Permutation, y: Permutation, z: Permutation) -> int:
        return self.gamma_idx(self.index[x], self.index[y], self.index[z])

    @cached_property
    def _distinguished(self) -> frozenset[int]:
        return frozenset(z for z in range(self.size) if self._a[z] == self._delta[z])

    def distinguished_involutions(self) -> frozenset[Permutation]:
        return frozenset(self.elements[d] for d in self._distinguished)

    # -- cells --------------------------------------------------------------

    @cached_property
    def _cells(self) -> tuple[Preorder, Preorder, Preorder]:
        nodes = range(self.size)
        left = [(w, y) for w in nodes for i in self.gens for y in self._g[self.gen_index[i]][w]]
        right = [(w, y) for w in nodes for i in self.gens for y in self._g[w][self.gen_index[i]]]
        return Preorder(nodes, left), Preorder(nodes, right), Preorder(nodes, left + right)

    def cells_idx(self) -> tuple[Preorder, Preorder, Preorder]:
        return self._cells

    def cells(self) -> CellData:
        lp, rp, lrp = self._cells
        el = self.elements

        return CellData(
            left=lp.relabel(el), right=rp.relabel(el), two_sided=lrp.relabel(el),
            a_value={el[k]: self._a[k] for k in range(self.size)},
            delta={el[k]: self._delta[k] for k in range(self.size)},
            distinguished=self.distinguished_involutions(),
        )

    # -- the standard dual basis --------------------------------------------

    @cached_property
    def _kl_inverse(self) -> list[Vector]:
        """Rows of P^-1 where P[y][x] = p_{y,x} (unitriangular)."""
        rows = []
        for w in range(self.size):
            q: Vector = {}
            for x in range(w, self.size):
                acc = LaurentPoly(1) if x == w else LaurentPoly()
                for y, p in self._kl[x].items():
                    if y != x and y in q:
                        acc = acc - q[y] * p
                if acc:
                    q[x] = acc
            rows.append(q)
        return rows

    def standard_dual_basis(self, w: Permutation) -> HeckeElement:
        """D_w with tau(C_x D_w) = delta_{x,w} for tau(T_w) = delta_{w,e}."""
        q = self._kl_inverse[self.index[w]]
        return HeckeElement(self, {self.inverse[y]: c for y, c in q.items()})

    # -- checks -------------------------------------------------------------

    def iter_elements(self) -> Iterator[Permutation]:
        return iter(self.elements)

    def verify(self, include_p15: bool = True) -> list[Report]:
        from ._hecke_checks import verify_hecke
        return verify_hecke(self, include_p15=include_p15)


def kl_by_bar_invariance(alg: HeckeAlgebra) -> list[Vector]:
    """Independent derivation of every C_w by solving bar(C_w) = C_w top-down.

    With bar(T_z) = sum_y R[y][z] T_y, the coefficient of T_y in bar(C_w) = C_w
    reads p_{y,w} - bar(p_{y,w}) = sum_{y < z <= w} bar(p_{z,w}) R[y][z], and the
    degree condition picks out the strictly negative part of the right side.
    """
    bars = alg._t_bar_images
    out = []
    for w in range(alg.size):
        wperm = alg.elements[w]
        below = sorted((alg.index[y] for y in bruhat_interval(wperm)),
                       key=lambda k: -alg.lengths[k])
        p: Vector = {w: LaurentPoly(1)}
        for y in below:
            if y == w:
                continue
            rhs = LaurentPoly()
            for z, pz in p.items():
                r = bars[z].get(y)
                if r is not None:
                    rhs = rhs + pz.bar() * r
            neg = LaurentPoly((e, c) for e, c in rhs if e < 0)
            if rhs.coefficient(0) != 0 or rhs - neg != -neg.bar():
                raise AssertionError(f"bar-invariance system inconsistent at ({y}, {w})")
            if neg:
                p[y] = neg
        out.append(p)
    return out


def verify_P(r: int, include_p15: bool = True) -> list[Report]:
    return HeckeAlgebra(r).verify(include_p15=include_p15)


def p15_sides(alg: HeckeAlgebra, w: int, xp: int, x: int) -> tuple[dict, dict]:
    """Both sides of the two-parameter identity for fixed (w, x', x), all y at once.

    Left:  sum_{y'} g'_{w,x',y'} g_{x,y',y};  right: sum_{y'} g_{x,w,y'} g'_{y',x',y}.
    """
    lhs: dict[int, BivariatePoly] = {}
    for yp, gp in alg._g[w][xp].items():
        for y, g in alg._g[x][yp].items():
            term = mixed_product(gp, g)
            lhs[y] = lhs[y] + term if y in lhs else term
    rhs: dict[int, BivariatePoly] = {}
    for yp, g in alg._g[x][w].items():
        for y, gp in alg._g[yp][xp].items():
            term = mixed_product(gp, g)
            rhs[y] = rhs[y] + term if y in rhs else term
    return lhs, rhs


def gram_matrix(alg: HeckeAlgebra) -> list[list[RationalFunction]]:
    """(tau(C_x C_y)) for the form tau(T_w) = delta_{w,e}; used to cross-check D_w."""
    tau_c = [alg._kl[z].get(0, LaurentPoly()) for z in range(alg.size)]
    rows = []
    for x in range(alg.size):
        row = []
        for y in range(alg.size):
            acc = LaurentPoly()
            for z, c in alg._g[x][y].items():
                if tau_c[z]:
                    acc = acc + c * tau_c[z]
            row.append(RationalFunction.coerce(acc))
        rows.append(row)
    return rows


__all__ = [
    "HeckeAlgebra", "HeckeElement", "CellData", "Report",
    "kl_by_bar_invariance", "verify_P", "p15_sides", "gram_matrix",
]
