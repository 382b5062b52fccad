"""The generic q-Schur algebra S_q(n, r) on Du's theta-basis.

The basis is indexed by triples ``(lam, w, mu)`` with ``w`` the shortest element
of its ``W_lam``-``W_mu`` double coset.  Products are given by

    f_{a,b,c} = h_{co(a)}^-1 * g_{sigma(a), sigma(b), sigma(c)}

when ``co(a) = ro(b)`` and ``(ro(c), co(c)) = (ro(a), co(b))``, and zero
otherwise.  Here ``sigma`` picks the longest element of the double coset and
``g`` are the Kazhdan-Lusztig structure constants of H(S_r).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property

from .errors import IdentityCheckFailed
from .exactarith import LaurentPoly, RationalFunction, exact_divide
from .hecke import HeckeAlgebra, Vector, _axpy
from .preorder import Preorder
from .weyl import Composition, Permutation, compositions, double_coset_reps, young_subgroup


@dataclass(frozen=True)
class MnrIndex:
    lam: Composition
    w: Permutation
    mu: Composition

    @property
    def ro(self) -> Composition:
        return self.lam

    @property
    def co(self) -> Composition:
        return self.mu

    def transpose(self) -> "MnrIndex":
        return MnrIndex(self.mu, self.w.inverse(), self.lam)

    @property
    def t(self) -> "MnrIndex":
        return self.transpose()

    def sigma(self) -> Permutation:
        from .weyl import sigma
        return sigma(self.lam, self.w, self.mu)

    def label(self) -> str:
        """``"2,1,0/s2/1,1,1"``: row shape, reduced word, column shape."""
        comp = ",".join(map(str, self.lam)), ",".join(map(str, self.mu))
        return f"{comp[0]}/{self.w.word_str()}/{comp[1]}"

    def to_json(self) -> dict:
        return {"lambda": list(self.lam), "w": self.w.word_str(), "mu": list(self.mu)}

    @classmethod
    def parse(cls, text: str, r: int) -> "MnrIndex":
        parts = text.strip().strip("()").split("/")
        if len(parts) != 3:
            raise ValueError(f"expected 'lambda/word/mu', got {text!r}")
        lam = Composition(int(x) for x in re.split(r"[,\s]+", parts[0].strip()) if x)
        mu = Composition(int(x) for x in re.split(r"[,\s]+", parts[2].strip()) if x)
        return cls(lam, Permutation.parse(parts[1], r), mu)

    def __str__(self):
        return self.label()


def enumerate_indices(n: int, r: int) -> list[MnrIndex]:
    """M(n, r) in canonical order: by (ro, co) in decreasing lex order, then by rep."""
    comps = compositions(n, r)
    return [MnrIndex(lam, d.w_min, mu)
            for lam in comps for mu in comps for d in double_coset_reps(lam, mu)]


def h_poincare(mu) -> LaurentPoly:
    """sum over W_mu of v^(2 l(w) - l(w_mu)), w_mu the longest element of W_mu."""
    ys = young_subgroup(Composition(mu))
    top = ys.longest.length()
    return LaurentPoly((2 * w.length() - top, 1) for w in ys.elements)


def _clean(c):
    """Store polynomial values as LaurentPoly so equal coefficients compare structurally."""
    if isinstance(c, RationalFunction) and c.is_polynomial():
        return c.num
    return c


class QSchurElement:
    """An element of K S_q(n, r) in theta-coordinates (int index -> coefficient)."""

    __slots__ = ("algebra", "coords")

    def __init__(self, algebra: "QSchurAlgebra", coords: dict):
        self.algebra = algebra
        self.coords = {k: _clean(c) for k, c in coords.items() if c}

    @classmethod
    def theta(cls, algebra, a) -> "QSchurElement":
        k = a if isinstance(a, int) else algebra.index[a]
        return cls(algebra, {k: LaurentPoly(1)})

    def __add__(self, other):
        acc = dict(self.coords)
        for k, c in other.coords.items():
            acc[k] = acc[k] + c if k in acc else c
        return QSchurElement(self.algebra, acc)

    def __neg__(self):
        return QSchurElement(self.algebra, {k: -c for k, c in self.coords.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, QSchurElement):
            return self.algebra.multiply(self, other)
        return QSchurElement(self.algebra, {k: c * other for k, c in self.coords.items()})

    def __rmul__(self, scalar):
        return QSchurElement(self.algebra, {k: scalar * c for k, c in self.coords.items()})

    def __eq__(self, other):
        return isinstance(other, QSchurElement) and self.coords == other.coords

    def __hash__(self):
        return hash(frozenset(self.coords.items()))

    def is_zero(self) -> bool:
        return not self.coords

    def is_in_A(self) -> bool:
        """True when every coordinate is an integral Laurent polynomial."""
        return all(c.is_in_A() for c in self.coords.values())

    def coefficient(self, a):
        k = a if isinstance(a, int) else self.algebra.index[a]
        return self.coords.get(k, LaurentPoly())

    def by_index(self) -> dict:
        return {self.algebra.indices[k]: c for k, c in sorted(self.coords.items())}

    def __repr__(self):
        terms = [f"({c})*theta[{self.algebra.indices[k].label()}]"
                 for k, c in sorted(self.coords.items())]
        return " + ".join(terms) or "0"


@dataclass
class CellModule:
    """Left cell module of a left cell Gamma; action(b)[i][j] = f_{b, Gamma[j], Gamma[i]}."""
    algebra: "QSchurAlgebra"
    cell: list[int]

    def action(self, b: int) -> list[list[LaurentPoly]]:
        alg = self.algebra
        pos = {c: i for i, c in enumerate(self.cell)}
        m = len(self.cell)
        rows = [[LaurentPoly() for _ in range(m)] for _ in range(m)]
        for j, a in enumerate(self.cell):
            for c, f in alg.product_idx(b, a).items():
                i = pos.get(c)
                if i is not None:
                    rows[i][j] = f
        return rows

    def action_of(self, x: QSchurElement) -> list[list]:
        m = len(self.cell)
        out = [[LaurentPoly() for _ in range(m)] for _ in range(m)]
        for b, coef in x.coords.items():
            mat = self.action(b)
            for i in range(m):
                for j in range(m):
                    if mat[i][j]:
                        out[i][j] = out[i][j] + coef * mat[i][j]
        return [[_clean(c) for c in row] for row in out]

    def character(self, b: int) -> LaurentPoly:
        """Trace of the action of theta_b."""
        alg = self.algebra
        total = LaurentPoly()
        for a in self.cell:
            f = alg.product_idx(b, a).get(a)
            if f is not None:
                total = total + f
        return total

    @property
    def dimension(self) -> int:
        return len(self.cell)

    @property
    def members(self) -> list[MnrIndex]:
        return [self.algebra.indices[k] for k in self.cell]


class QSchurAlgebra:
    """S_q(n, r) from its structure constants, with cells and distinguished set.

    Internally indices are positions in :func:`enumerate_indices`; public
    helpers accept :class:`MnrIndex` values as well.
    """

    def __init__(self, n: int, r: int, hecke: HeckeAlgebra | None = None):
        if n < 1 or r < 1:
            raise ValueError("n and r must be positive")
        self.n, self.r = n, r
        self.hecke = hecke if hecke is not None else HeckeAlgebra(r)
        self.compositions = compositions(n, r)
        comp_index = {lam: i for i, lam in enumerate(self.compositions)}
        self.indices = enumerate_indices(n, r)
        self.size = len(self.indices)
        self.index = {a: k for k, a in enumerate(self.indices)}
        self.ro = [comp_index[a.lam] for a in self.indices]
        self.co = [comp_index[a.mu] for a in self.indices]
        self.sigma_perm = [a.sigma() for a in self.indices]
        self.sig = [self.hecke.index[s] for s in self.sigma_perm]
        self.tr = [self.index[a.transpose()] for a in self.indices]
        self.by_shape: dict[tuple[int, int], list[int]] = {}
        for k in range(self.size):
            self.by_shape.setdefault((self.ro[k], self.co[k]), []).append(k)
        self.by_row: dict[int, list[int]] = {}
        self.by_col: dict[int, list[int]] = {}
        for k in range(self.size):
            self.by_row.setdefault(self.ro[k], []).append(k)
            self.by_col.setdefault(self.co[k], []).append(k)
        self._by_sigma = {(self.ro[k], self.co[k], self.sig[k]): k for k in range(self.size)}
        self.h = [h_poincare(lam) for lam in self.compositions]
        self._products: dict[tuple[int, int], Vector] = {}
        self._identity_terms = [self.index[MnrIndex(lam, Permutation.identity(r), lam)]
                                for lam in self.compositions]
        self._check_identity()

    # -- structure constants ------------------------------------------------

    def product_idx(self, a: int, b: int) -> Vector:
        """theta_a theta_b as {c: f_{a,b,c}}; memoized."""
        key = (a, b)
        vec = self._products.get(key)
        if vec is None:
            vec = {}
            if self.co[a] == self.ro[b]:
                lam, nu, h = self.ro[a], self.co[b], self.h[self.co[a]]
                for z, g in self.hecke.g_idx(self.sig[a], self.sig[b]).items():
                    c = self._by_sigma.get((lam, nu, z))
                    if c is not None:
                        vec[c] = exact_divide(g, h)
            self._products[key] = vec
        return vec

    def _k(self, a) -> int:
        return a if isinstance(a, int) else self.index[a]

    def f_constant(self, a, b, c) -> LaurentPoly:
        return self.product_idx(self._k(a), self._k(b)).get(self._k(c), LaurentPoly())

    def theta(self, a) -> QSchurElement:
        return QSchurElement.theta(self, self._k(a))

    def element(self, coords: dict) -> QSchurElement:
        return QSchurElement(self, {self._k(a): c for a, c in coords.items()})

    def multiply(self, x: QSchurElement, y: QSchurElement) -> QSchurElement:
        acc: dict = {}
        for a, ca in x.coords.items():
            for b, cb in y.coords.items():
                coef = ca * cb
                for c, f in self.product_idx(a, b).items():
                    term = coef * f
                    acc[c] = acc[c] + term if c in acc else term
        return QSchurElement(self, acc)

    def identity(self) -> QSchurElement:
        return QSchurElement(self, {k: LaurentPoly(1) for k in self._identity_terms})

    def _check_identity(self) -> None:
        for k in range(self.size):
            left = self.identity_action(k, side="left")
            right = self.identity_action(k, side="right")
            if left != {k: 1} or right != {k: 1}:
                raise IdentityCheckFailed(f"sum of theta_(lam,e,lam) is not neutral on {self.indices[k]}")

    def identity_action(self, k: int, side: str) -> dict:
        acc: Vector = {}
        for e in self._identity_terms:
            vec = self.product_idx(e, k) if side == "left" else self.product_idx(k, e)
            _axpy(acc, LaurentPoly(1), vec)
        return acc

    # -- a-function, D(n,r), gamma ------------------------------------------

    def a_idx(self, k: int) -> int:
        return self.hecke.a_idx(self.sig[k])

    def a_function(self, a) -> int:
        return self.a_idx(self._k(a))

    def delta_sigma(self, k: int) -> int:
        """Delta(sigma(a))."""
        return self.hecke._delta[self.sig[k]]

    @cached_property
    def distinguished_idx(self) -> list[int]:
        D = self.hecke._distinguished
        return [k for k in range(self.size) if self.ro[k] == self.co[k] and self.sig[k] in D]

    def distinguished_set(self) -> list[MnrIndex]:
        return [self.indices[k] for k in self.distinguished_idx]

    @cached_property
    def gammas(self) -> dict[tuple[int, int, int], int]:
        """Nonzero gamma_{a,b,c}: gamma_{a,b,c^t} is the v^a(sigma c) coefficient of g when f_{a,b,c} != 0."""
        out = {}
        hk = self.hecke
        for (ro, co), block in self.by_shape.items():
            for a in block:
                for b in self.by_row.get(co, ()):
                    g = hk.g_idx(self.sig[a], self.sig[b])
                    for c in self.product_idx(a, b):
                        z = self.sig[c]
                        k = g[z].coefficient(hk.a_idx(z))
                        if k:
                            out[(a, b, self.tr[c])] = k
        return out

    def q_gamma(self, a, b, c) -> int:
        return self.gammas.get((self._k(a), self._k(b), self._k(c)), 0)

    # -- cells --------------------------------------------------------------

    def _left_edges(self) -> list[tuple[int, int]]:
        """(b, a) whenever f_{c,b,a} != 0 for some c."""
        edges = set()
        for b in range(self.size):
            for c in self.by_col.get(self.ro[b], ()):
                for a in self.product_idx(c, b):
                    edges.add((b, a))
        return sorted(edges)

    def _right_edges_direct(self) -> list[tuple[int, int]]:
        """(b, a) whenever f_{b,c,a} != 0 for some c."""
        edges = set()
        for b in range(self.size):
            for c in self.by_row.get(self.co[b], ()):
                for a in self.product_idx(b, c):
                    edges.add((b, a))
        return sorted(edges)

    @cached_property
    def left_edges(self) -> list[tuple[int, int]]:
        return self._left_edges()

    @cached_property
    def _cells(self) -> tuple[Preorder, Preorder, Preorder]:
        nodes = range(self.size)
        left = self.left_edges
        right = [(self.tr[b], self.tr[a]) for b, a in left]
        return Preorder(nodes, left), Preorder(nodes, right), Preorder(nodes, left + right)

    def cells_idx(self) -> tuple[Preorder, Preorder, Preorder]:
        return self._cells

    def cells(self) -> tuple[Preorder, Preorder, Preorder]:
        """Left, right and two-sided preorders on MnrIndex values."""
        return tuple(p.relabel(self.indices) for p in self._cells)

    @property
    def left_cells(self) -> list[list[int]]:
        return self._cells[0].classes

    def left_cell_of_distinguished(self, d: int) -> list[int]:
        return self._cells[0].cell(d)

    def distinguished_in_cell(self, k: int) -> int:
        """The unique d in D(n,r) with d ~L k."""
        left = self._cells[0]
        ds = [d for d in self.distinguished_idx if left.equiv(d, k)]
        if len(ds) != 1:
            raise AssertionError(f"left cell of {self.indices[k]} holds {len(ds)} distinguished elements")
        return ds[0]

    def cell_module(self, cell) -> CellModule:
        cell = [self._k(a) for a in cell]
        return CellModule(self, cell)

    def verify(self, include_q15: bool = True, include_associativity: bool = True):
        from ._qschur_checks import verify_qschur
        return verify_qschur(self, include_q15=include_q15,
                             include_associativity=include_associativity)


def verify_Q(n: int, r: int, include_q15: bool = True):
    return QSchurAlgebra(n, r).verify(include_q15=include_q15)


__all__ = [
    "MnrIndex", "QSchurAlgebra", "QSchurElement", "CellModule",
    "enumerate_indices", "h_poincare", "verify_Q",
]
