"""Symmetrising trace forms on K S_q(n, r) and the Wedderburn basis they induce.

A trace form is ``tau = sum_chi chi / c_chi`` over the irreducible characters,
which are the characters of the left cell modules.  Two left cell modules are
identified when their full character vectors agree.  Given tau:

* ``P`` is the Gram matrix ``(tau(theta_a theta_b))``;
* the dual basis is ``theta_b^v = sum_a (P^-1)_{b,a} theta_a``;
* the Wedderburn basis element attached to ``c`` is
  ``B_c = c_d^-1 theta_c theta_d^v`` where ``d`` is the distinguished element
  of the left cell of ``c``;
* ``M`` expresses the theta-basis in B (``theta_a = sum_c M[a][c] B_c``) and
  ``D = M^T P^-1 M``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Sequence

from . import linalg
from ._hecke_checks import _report
from .errors import (ClassSplitsTwoSidedCell, LinearDependence, NonIntegralEntry,
                     NotMonomial, SingularGram)
from .exactarith import LaurentPoly, RationalFunction, parse_ratfunc
from .hecke import Report
from .qschur import QSchurAlgebra, QSchurElement, _clean
from .weyl import partitions_at_most, rs_shape

ZERO = LaurentPoly()
ONE = LaurentPoly(1)


@dataclass(frozen=True)
class IsoClass:
    """Left cells whose cell modules share one irreducible character."""
    ordinal: int
    cells: tuple[tuple[int, ...], ...]
    dimension: int
    shape: tuple[int, ...]
    character: tuple = field(repr=False)

    def label(self) -> str:
        return "(" + ",".join(map(str, self.shape)) + ")"


@lru_cache(maxsize=None)
def iso_classes(S: QSchurAlgebra) -> tuple[IsoClass, ...]:
    """Group left cells by character vector, in order of their first member.

    Each class is labelled by the conjugate of the Robinson-Schensted shape of
    sigma(d) for its distinguished elements d, a partition of r with at most n
    parts; the label is checked to be constant on a class
    and distinct between classes.
    """
    left, _, two_sided = S.cells_idx()
    groups: dict[tuple, list[tuple[int, ...]]] = {}
    for cell in left.classes:
        mod = S.cell_module(cell)
        chi = tuple(mod.character(b) for b in range(S.size))
        groups.setdefault(chi, []).append(tuple(cell))
    classes = []
    for ordinal, (chi, cells) in enumerate(groups.items()):
        if len({two_sided.class_of[c[0]] for c in cells}) != 1:
            raise ClassSplitsTwoSidedCell(
                f"isomorphic cell modules in different two-sided cells: {cells}")
        shapes = {_conjugate(rs_shape(S.sigma_perm[S.distinguished_in_cell(c[0])])) for c in cells}
        if len(shapes) != 1:
            raise AssertionError(f"class {ordinal} mixes shapes {shapes}")
        classes.append(IsoClass(ordinal, tuple(cells), len(cells[0]), shapes.pop(), chi))
    if len({c.shape for c in classes}) != len(classes):
        raise AssertionError("two classes share a shape label")
    return tuple(classes)


def _conjugate(shape: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(sum(1 for part in shape if part > i) for i in range(shape[0] if shape else 0))


def _as_scalar(x):
    if isinstance(x, str):
        x = parse_ratfunc(x)
    if isinstance(x, int):
        x = LaurentPoly(x)
    return _clean(x)


class TraceForm:
    """tau = sum over iso-classes of chi / c_chi.

    ``schur`` maps class ordinals to the Schur elements c_chi (anything
    accepted by :func:`parse_ratfunc`, a LaurentPoly or a RationalFunction);
    a sequence is read in class order.  Missing classes default to 1.
    """

    def __init__(self, S: QSchurAlgebra, schur: dict | Sequence | None = None):
        self.algebra = S
        self.classes = iso_classes(S)
        values = [ONE] * len(self.classes)
        if isinstance(schur, dict):
            for k, x in schur.items():
                if not 0 <= int(k) < len(values):
                    raise ValueError(f"no iso-class with ordinal {k}")
                values[int(k)] = _as_scalar(x)
        elif schur is not None:
            if len(schur) != len(values):
                raise ValueError(f"expected {len(values)} Schur elements, got {len(schur)}")
            values = [_as_scalar(x) for x in schur]
        if any(not x for x in values):
            raise ValueError("Schur elements must be nonzero")
        self.schur_by_class = values
        self.class_of: list[int] = [0] * S.size
        for cls in self.classes:
            for cell in cls.cells:
                for k in cell:
                    self.class_of[k] = cls.ordinal

    def schur_of(self, k: int):
        """c_chi for the class of the left cell containing k."""
        return self.schur_by_class[self.class_of[k]]

    @cached_property
    def tau_theta(self) -> list:
        out = []
        for b in range(self.algebra.size):
            acc = ZERO
            for cls, c in zip(self.classes, self.schur_by_class):
                chi = cls.character[b]
                if chi:
                    acc = acc + (chi if c == ONE else chi / c)
            out.append(_clean(acc))
        return out

    def tau(self, x: QSchurElement):
        acc = ZERO
        t = self.tau_theta
        for k, c in x.coords.items():
            if t[k]:
                acc = acc + c * t[k]
        return _clean(acc)

    @cached_property
    def gram(self) -> list[list]:
        """P[a][b] = tau(theta_a theta_b) = sum_c f_{a,b,c} tau(theta_c)."""
        S, t = self.algebra, self.tau_theta
        P = [[ZERO] * S.size for _ in range(S.size)]
        for a in range(S.size):
            for b in S.by_row.get(S.co[a], ()):
                acc = ZERO
                for c, f in S.product_idx(a, b).items():
                    if t[c]:
                        acc = acc + f * t[c]
                P[a][b] = _clean(acc)
        return P

    def to_json(self) -> dict:
        return {"classes": [{"ordinal": c.ordinal, "shape": list(c.shape), "dimension": c.dimension,
                             "leftCells": len(c.cells), "schur": str(s)}
                            for c, s in zip(self.classes, self.schur_by_class)]}


class WedderburnData:
    """Everything derived from one trace form; built eagerly, immutable afterwards."""

    def __init__(self, form: TraceForm):
        self.form = form
        S = self.algebra = form.algebra
        n = S.size
        self.gram = form.gram
        try:
            self.gram_inv = linalg.inverse(self.gram)
        except ZeroDivisionError as exc:
            raise SingularGram("the Gram matrix of tau is singular") from exc
        self.dual = [QSchurElement(S, {a: x for a, x in enumerate(self.gram_inv[b]) if x})
                     for b in range(n)]
        self.d_of = [S.distinguished_in_cell(k) for k in range(n)]
        self.schur_elements = {d: form.schur_of(d) for d in S.distinguished_idx}
        self.theta_dual = {}
        self.basis: list[QSchurElement] = []
        for c in range(n):
            d = self.d_of[c]
            td = self.theta_times_dual(c, d)
            self.basis.append(td * (1 / RationalFunction.coerce(self.schur_elements[d])))
        coords = [[b.coefficient(a) for a in range(n)] for b in self.basis]
        try:
            self.M = linalg.inverse(coords)
        except ZeroDivisionError as exc:
            raise LinearDependence("the Wedderburn family does not span") from exc
        bad = [(a, c) for a in range(n) for c in range(n) if not _in_A(self.M[a][c])]
        if bad:
            a, c = bad[0]
            raise NonIntegralEntry(f"M[{S.indices[a]}][{S.indices[c]}] = {self.M[a][c]}")
        MT = linalg.transpose(self.M)
        self.D = [[_clean(x) for x in row]
                  for row in linalg.matmul(linalg.matmul(MT, self.gram_inv, ZERO), self.M, ZERO)]
        if not linalg.is_monomial(self.D):
            raise NotMonomial("M^T P^-1 M is not monomial")

    def theta_times_dual(self, c: int, d: int) -> QSchurElement:
        """theta_c theta_d^v (memoized)."""
        key = (c, d)
        x = self.theta_dual.get(key)
        if x is None:
            x = QSchurElement.theta(self.algebra, c) * self.dual[d]
            self.theta_dual[key] = x
        return x

    def matrix_unit(self, a: int, b: int) -> QSchurElement:
        """c_chi^-1 theta_a theta_b^v."""
        c = RationalFunction.coerce(self.form.schur_of(a))
        return self.theta_times_dual(a, b) * (1 / c)

    def central_idempotent(self, cell: Sequence[int]) -> QSchurElement:
        acc = QSchurElement(self.algebra, {})
        for a in cell:
            acc = acc + self.theta_times_dual(a, a)
        return acc * (1 / RationalFunction.coerce(self.form.schur_of(cell[0])))

    def M_closed_form(self, a: int, c: int) -> LaurentPoly:
        """m_{a,c} = tau(theta_a B_c^v) = f_{a, c^t, d(c^t)}, from the dual of B."""
        S = self.algebra
        ct = S.tr[c]
        return S.product_idx(a, ct).get(self.d_of[ct], ZERO)

    def bilinear(self, x: QSchurElement, y: QSchurElement):
        """tau(x y) through the Gram matrix."""
        acc = ZERO
        for a, ca in x.coords.items():
            row = self.gram[a]
            for b, cb in y.coords.items():
                if row[b]:
                    acc = acc + ca * cb * row[b]
        return _clean(acc)

    def verify(self, exhaustive_triples: bool = True) -> list[Report]:
        return verify_wedderburn(self, exhaustive_triples=exhaustive_triples)


def _in_A(x) -> bool:
    return x.is_in_A() if hasattr(x, "is_in_A") else float(x).is_integer()


def tau(x: QSchurElement, form: TraceForm):
    return form.tau(x)


def dual_basis(form: TraceForm) -> list[QSchurElement]:
    """theta_b^v for every b, in theta-coordinates."""
    try:
        inv = linalg.inverse(form.gram)
    except ZeroDivisionError as exc:
        raise SingularGram("the Gram matrix of tau is singular") from exc
    S = form.algebra
    return [QSchurElement(S, {a: x for a, x in enumerate(row) if x}) for row in inv]


def matrix_units(cell: Sequence[int], data: WedderburnData) -> dict[tuple[int, int], QSchurElement]:
    """c_chi^-1 theta_a theta_b^v for a, b in one left cell."""
    return {(a, b): data.matrix_unit(a, b) for a in cell for b in cell}


def wedderburn_basis(form: TraceForm) -> WedderburnData:
    return WedderburnData(form)


def change_of_basis_M(form: TraceForm) -> list[list]:
    return WedderburnData(form).M


def monomial_D(form: TraceForm) -> list[list]:
    return WedderburnData(form).D


def verify_wedderburn(W: WedderburnData, exhaustive_triples: bool = True) -> list[Report]:
    S, form = W.algebra, W.form
    n = S.size
    N = range(n)
    tr = S.tr
    left, right, two_sided = S.cells_idx()
    theta = [QSchurElement.theta(S, k) for k in N]
    one = S.identity()

    def lab(k):
        return S.indices[k].label()

    def labs(*ks):
        return {"indices": [lab(k) for k in ks]}

    def delta(i, j):
        return ONE if i == j else ZERO

    reports: list[Report] = []
    add = reports.append

    add(_report("gram.symmetric", ((a, b) for a in N for b in N),
                lambda p: W.gram[p[0]][p[1]] == W.gram[p[1]][p[0]], lambda p: labs(*p)))
    add(_report("dual.left", ((a, b) for a in N for b in N),
                lambda p: form.tau(theta[p[0]] * W.dual[p[1]]) == delta(*p), lambda p: labs(*p)))
    add(_report("dual.right", ((a, b) for a in N for b in N),
                lambda p: form.tau(W.dual[p[1]] * theta[p[0]]) == delta(*p), lambda p: labs(*p)))

    rng = random.Random(0)

    def random_element():
        coords = {}
        for k in rng.sample(range(n), min(n, 4)):
            num = LaurentPoly({rng.randint(-2, 2): rng.randint(-3, 3) or 1})
            den = LaurentPoly({0: 1, rng.randint(1, 2): rng.randint(1, 3)})
            coords[k] = RationalFunction(num, den)
        return QSchurElement(S, coords)

    def formula1(x):
        rebuilt = QSchurElement(S, {a: form.tau(x * W.dual[a]) for a in N})
        return rebuilt == x
    add(_report("formula1", theta + [random_element() for _ in range(5)], formula1,
                lambda x: {"element": repr(x)}))

    add(_report("charLR.left", ((a, b) for a in N for b in N),
                lambda p: left.leq(*p) == (not (theta[p[1]] * W.dual[p[0]]).is_zero()),
                lambda p: labs(*p)))
    add(_report("charLR.right", ((a, b) for a in N for b in N),
                lambda p: right.leq(*p) == (not (W.dual[p[0]] * theta[p[1]]).is_zero()),
                lambda p: labs(*p)))

    def shape_triples():
        for a in N:
            for b in S.by_row.get(S.co[a], ()):
                for c in S.by_shape.get((S.ro[a], S.co[b]), ()):
                    yield a, b, c
    if exhaustive_triples:
        add(_report("f_via_tau", shape_triples(),
                    lambda t: form.tau(theta[t[0]] * theta[t[1]] * W.dual[t[2]])
                    == S.product_idx(t[0], t[1]).get(t[2], ZERO),
                    lambda t: labs(*t)))

        def dual_triples():
            for a in N:
                for b in S.by_col.get(S.co[a], ()):
                    for c in S.by_row.get(S.ro[b], ()):
                        yield a, b, c
        add(_report("dual_is_module", dual_triples(),
                    lambda t: _in_A(form.tau(theta[t[0]] * W.dual[t[1]] * theta[t[2]])),
                    lambda t: labs(*t)))

    def units_ok(cell):
        for a in cell:
            for b in cell:
                e_ab = W.matrix_unit(a, b)
                for a2 in cell:
                    for b2 in cell:
                        expected = W.matrix_unit(a, b2) if b == a2 else QSchurElement(S, {})
                        if e_ab * W.matrix_unit(a2, b2) != expected:
                            return False
        return True
    add(_report("matrix_units", left.classes, units_ok, lambda c: {"cell": [lab(k) for k in c]}))

    idems = {tuple(c): W.central_idempotent(c) for c in left.classes}
    add(_report("central_idempotent.idempotent", left.classes,
                lambda c: idems[tuple(c)] * idems[tuple(c)] == idems[tuple(c)],
                lambda c: {"cell": [lab(k) for k in c]}))
    add(_report("central_idempotent.central", ((tuple(c), b) for c in left.classes for b in N),
                lambda p: idems[p[0]] * theta[p[1]] == theta[p[1]] * idems[p[0]],
                lambda p: {"cell": [lab(k) for k in p[0]], "b": lab(p[1])}))
    add(_report("central_idempotent.class_invariant", form.classes,
                lambda cls: len({idems[c] for c in cls.cells}) == 1,
                lambda cls: {"class": cls.ordinal}))

    def idem_sum():
        total = QSchurElement(S, {})
        for cls in form.classes:
            total = total + idems[cls.cells[0]]
        return total == one
    add(_report("central_idempotent.sum_is_one", [None], lambda _: idem_sum(), lambda _: {}))

    def acts_as_identity(cell):
        mat = S.cell_module(cell).action_of(idems[tuple(cell)])
        return all(mat[i][j] == delta(i, j) for i in range(len(cell)) for j in range(len(cell)))
    add(_report("central_idempotent.identity_on_cell", left.classes, acts_as_identity,
                lambda c: {"cell": [lab(k) for k in c]}))

    D = sorted(W.schur_elements)
    prim = {d: W.basis[d] for d in D}
    add(_report("idempotents.orthogonal", ((d, e) for d in D for e in D),
                lambda p: prim[p[0]] * prim[p[1]] == (prim[p[0]] if p[0] == p[1] else QSchurElement(S, {})),
                lambda p: labs(*p)))

    def prim_sum():
        total = QSchurElement(S, {})
        for d in D:
            total = total + prim[d]
        return total == one
    add(_report("idempotents.sum_is_one", [None], lambda _: prim_sum(), lambda _: {}))

    add(_report("wedderburn.homogeneous", N,
                lambda c: all(S.ro[k] == S.ro[c] and S.co[k] == S.co[c] for k in W.basis[c].coords),
                lambda c: {"c": lab(c)}))

    def product_law(p):
        c, c2 = p
        d, d2 = W.d_of[c], W.d_of[c2]
        got = W.basis[c] * W.basis[c2]
        if form.class_of[d] != form.class_of[d2] or not right.equiv(d, c2):
            return got.is_zero()
        c3 = [x for x in left.cell(d2) if right.equiv(x, c)]
        return len(c3) == 1 and got == W.basis[c3[0]]
    add(_report("wedderburn.product_law", ((c, c2) for c in N for c2 in N),
                product_law, lambda p: labs(*p)))

    add(_report("wedderdual.pairing", ((c, c2) for c in N for c2 in N),
                lambda p: W.bilinear(W.basis[p[0]], W.theta_times_dual(p[1], W.d_of[p[1]]))
                == (ONE if p[1] == tr[p[0]] else ZERO),
                lambda p: labs(*p)))

    def eq_lc_mod(item):
        cls, gamma, gamma2 = item
        for d in gamma2:
            if d not in W.schur_elements:
                continue
            for c in gamma2:
                a = [x for x in gamma if right.equiv(x, c)]
                b = [x for x in gamma if right.equiv(x, d)]
                if len(a) != 1 or len(b) != 1:
                    return False
                if W.theta_times_dual(a[0], b[0]) != W.theta_times_dual(c, d):
                    return False
        return True
    add(_report("eqLCmod", ((cls, g, g2) for cls in form.classes for g in cls.cells for g2 in cls.cells),
                eq_lc_mod, lambda t: {"class": t[0].ordinal}))

    def l_d_matches(item):
        d, b = item
        cell = left.cell(d)
        mat = S.cell_module(cell).action(b)
        for j, c in enumerate(cell):
            lhs = theta[b] * W.theta_times_dual(c, d)
            rhs = QSchurElement(S, {})
            for i, c2 in enumerate(cell):
                if mat[i][j]:
                    rhs = rhs + W.theta_times_dual(c2, d) * mat[i][j]
            if lhs != rhs:
                return False
        return True
    add(_report("L_d.cell_module_matrices", ((d, b) for d in D for b in N), l_d_matches,
                lambda p: labs(*p)))

    add(_report("character_coincidence", N,
                lambda c: form.class_of[W.d_of[c]] == form.class_of[W.d_of[tr[c]]],
                lambda c: {"c": lab(c)}))
    add(_report("tau.trace", ((a, b) for a in N for b in N),
                lambda p: form.tau(theta[p[0]] * theta[p[1]]) == form.tau(theta[p[1]] * theta[p[0]]),
                lambda p: labs(*p)))

    expected_tau_one = ZERO
    for cls, c in zip(form.classes, form.schur_by_class):
        expected_tau_one = expected_tau_one + RationalFunction.coerce(cls.dimension) / c
    add(_report("tau.identity", [None], lambda _: form.tau(one) == _clean(expected_tau_one),
                lambda _: {"tau(1)": str(form.tau(one))}))

    n_parts = len(partitions_at_most(S.r, S.n))
    add(_report("classes.count", [len(form.classes)], lambda k: k == n_parts,
                lambda k: {"classes": k, "partitions": n_parts}))
    add(_report("classes.labels_are_partitions", [sorted(c.shape for c in form.classes)],
                lambda got: got == sorted(partitions_at_most(S.r, S.n)),
                lambda got: {"labels": got}))
    add(_report("classes.dimension_squares", [sum(c.dimension ** 2 for c in form.classes)],
                lambda k: k == n, lambda k: {"sum": k, "size": n}))
    add(_report("classes.grid", form.classes, lambda cls: cls.dimension == len(cls.cells),
                lambda cls: {"class": cls.ordinal}))
    add(_report("classes.in_one_two_sided_cell", form.classes,
                lambda cls: len({two_sided.class_of[c[0]] for c in cls.cells}) == 1,
                lambda cls: {"class": cls.ordinal}))

    add(_report("Sqcontained.M_in_A", ((a, c) for a in N for c in N),
                lambda p: _in_A(W.M[p[0]][p[1]]), lambda p: labs(*p)))
    add(_report("M.closed_form", ((a, c) for a in N for c in N),
                lambda p: W.M[p[0]][p[1]] == W.M_closed_form(*p), lambda p: labs(*p)))
    add(_report("diag.monomial", [W.D], linalg.is_monomial, lambda _: {}))
    add(_report("diag.entries", N,
                lambda c: W.D[c][tr[c]] == W.schur_elements[W.d_of[c]], lambda c: {"c": lab(c)}))
    if all(c == ONE for c in form.schur_by_class):
        add(_report("wedderselfdual.permutation", [W.D],
                    lambda Dm: all(x in (ZERO, ONE) for row in Dm for x in row), lambda _: {}))
    return reports


# name used by the published interface
verify_section4 = verify_wedderburn

__all__ = [
    "IsoClass", "iso_classes", "TraceForm", "WedderburnData", "tau", "dual_basis",
    "matrix_units", "wedderburn_basis",
    "change_of_basis_M", "monomial_D", "verify_wedderburn", "verify_section4",
]
