"""Exhaustive checks of Q1-Q11, Q13-Q15 and the supporting lemmas for S_q(n, r)."""

from __future__ import annotations

from typing import TYPE_CHECKING

from ._hecke_checks import _report
from .exactarith import mixed_product
from .hecke import Report
from .preorder import Preorder
from .weyl import partitions_at_most

if TYPE_CHECKING:
    from .qschur import QSchurAlgebra


def q15_sides(S: "QSchurAlgebra", a: int, ap: int, c: int) -> tuple[dict, dict]:
    """Left: sum_{b'} f'_{c,a',b'} f_{a,b',b}; right: sum_{b'} f_{a,c,b'} f'_{b',a',b}."""
    lhs: dict = {}
    for bp, fp in S.product_idx(c, ap).items():
        for b, f in S.product_idx(a, bp).items():
            term = mixed_product(fp, f)
            lhs[b] = lhs[b] + term if b in lhs else term
    rhs: dict = {}
    for bp, f in S.product_idx(a, c).items():
        for b, fp in S.product_idx(bp, ap).items():
            term = mixed_product(fp, f)
            rhs[b] = rhs[b] + term if b in rhs else term
    return lhs, rhs


def associativity_failure(S: "QSchurAlgebra"):
    """First (a, b, c) with (theta_a theta_b) theta_c != theta_a (theta_b theta_c), or None."""
    from .hecke import _axpy
    count = 0
    for a in range(S.size):
        for b in S.by_row.get(S.co[a], ()):
            ab = S.product_idx(a, b)
            for c in S.by_row.get(S.co[b], ()):
                count += 1
                lhs: dict = {}
                for x, coef in ab.items():
                    _axpy(lhs, coef, S.product_idx(x, c))
                rhs: dict = {}
                for y, coef in S.product_idx(b, c).items():
                    _axpy(rhs, coef, S.product_idx(a, y))
                if lhs != rhs:
                    return count, (a, b, c)
    return count, None


def verify_qschur(S: "QSchurAlgebra", include_q15: bool = True,
                  include_associativity: bool = True) -> list[Report]:
    N = range(S.size)
    tr = S.tr
    a_val = [S.a_idx(k) for k in N]
    D = set(S.distinguished_idx)
    gam = S.gammas
    left, right, lr = S.cells_idx()
    hk = S.hecke
    hleft, hright, hlr = hk.cells_idx()

    def lab(k):
        return S.indices[k].label()

    def labs(*ks):
        return {"indices": [lab(k) for k in ks]}

    below = {name: [(x, y) for y in N for x in p.below(y)]
             for name, p in (("L", left), ("R", right), ("LR", lr))}
    reports: list[Report] = []
    add = reports.append

    add(_report("Q1", N, lambda k: a_val[k] <= S.delta_sigma(k),
                lambda k: {"a": lab(k), "a_value": a_val[k], "Delta_sigma": S.delta_sigma(k)}))
    add(_report("Q2", sorted(k for k in gam if k[2] in D), lambda k: k[1] == tr[k[0]],
                lambda k: labs(*k)))
    add(_report("Q3", N, lambda k: sum(1 for d in D if (tr[k], k, d) in gam) == 1,
                lambda k: {"a": lab(k)}))
    add(_report("Q4", below["LR"], lambda p: a_val[p[0]] >= a_val[p[1]], lambda p: labs(*p)))
    add(_report("Q5", [(k, d) for k in N for d in sorted(D) if (tr[k], k, d) in gam],
                lambda p: gam[(tr[p[0]], p[0], p[1])] == 1, lambda p: labs(*p)))
    add(_report("Q6", sorted(D), lambda d: tr[d] == d, lambda d: {"d": lab(d)}))
    add(_report("Q7", sorted(gam),
                lambda k: gam.get((k[1], k[2], k[0])) == gam[k] == gam.get((k[2], k[0], k[1])),
                lambda k: labs(*k)))
    add(_report("Q8", sorted(gam),
                lambda k: (left.equiv(k[0], tr[k[1]]) and left.equiv(k[1], tr[k[2]])
                           and left.equiv(k[2], tr[k[0]])),
                lambda k: labs(*k)))
    for name, key, pre in (("Q9", "L", left), ("Q10", "R", right), ("Q11", "LR", lr)):
        add(_report(name, below[key],
                    lambda p, pre=pre: a_val[p[0]] != a_val[p[1]] or pre.equiv(*p),
                    lambda p: labs(*p)))

    def q13(cell):
        ds = [d for d in cell if d in D]
        return len(ds) == 1 and all((tr[k], k, ds[0]) in gam for k in cell)
    add(_report("Q13", left.classes, q13, lambda c: {"cell": [lab(k) for k in c]}))
    add(_report("Q14", N, lambda k: lr.equiv(k, tr[k]), lambda k: {"a": lab(k)}))

    if include_q15:
        def triples():
            for c in N:
                for ap in S.by_row.get(S.co[c], ()):
                    for a in S.by_col.get(S.ro[c], ()):
                        yield a, ap, c

        def q15(t):
            a, ap, c = t
            lhs, rhs = q15_sides(S, a, ap, c)
            return all(lhs.get(b) == rhs.get(b) for b in set(lhs) | set(rhs)
                       if a_val[b] == a_val[c])
        add(_report("Q15", triples(), q15, lambda t: {"a": lab(t[0]), "a'": lab(t[1]), "c": lab(t[2])}))

    add(_report("LReq", ((x, y) for y in N for x in left.cell(y)),
                lambda p: p[0] == p[1] or not right.equiv(*p), lambda p: labs(*p)))
    for key, hpre in (("L", hleft), ("R", hright), ("LR", hlr)):
        add(_report(f"sigmale.{key}", below[key],
                    lambda p, hpre=hpre: hpre.leq(S.sig[p[0]], S.sig[p[1]]), lambda p: labs(*p)))
    add(_report("roco.L", below["L"], lambda p: S.co[p[0]] == S.co[p[1]], lambda p: labs(*p)))
    add(_report("roco.R", below["R"], lambda p: S.ro[p[0]] == S.ro[p[1]], lambda p: labs(*p)))

    def lem3_cases():
        for a in N:
            for b in S.by_row.get(S.co[a], ()):
                for z in hk.g_idx(S.sig[a], S.sig[b]):
                    yield a, b, z
    add(_report("lem3", lem3_cases(),
                lambda t: (S.ro[t[0]], S.co[t[1]], t[2]) in S._by_sigma,
                lambda t: {"x": lab(t[0]), "y": lab(t[1]), "z": hk.elements[t[2]].word_str()}))
    direct = Preorder(N, S._right_edges_direct())
    add(_report("rightcells", ((x, y) for x in N for y in N),
                lambda p: right.leq(*p) == direct.leq(*p), lambda p: labs(*p)))

    left_rel = set(S.left_edges)
    add(_report("cells.one_step_is_transitive", below["L"],
                lambda p: p[0] == p[1] or (p[1], p[0]) in left_rel, lambda p: labs(*p)))
    add(_report("f.integrality", ((a, b) for a in N for b in S.by_row.get(S.co[a], ())),
                lambda p: all(f.is_in_A() for f in S.product_idx(*p).values()), lambda p: labs(*p)))
    add(_report("f.transpose_equality", ((a, b) for a in N for b in N),
                lambda p: {tr[c]: f for c, f in S.product_idx(*p).items()}
                == S.product_idx(tr[p[1]], tr[p[0]]),
                lambda p: labs(*p)))
    add(_report("a.transpose_invariant", N, lambda k: a_val[k] == a_val[tr[k]],
                lambda k: {"a": lab(k)}))
    add(_report("identity.two_sided", N,
                lambda k: S.identity_action(k, "left") == {k: 1} == S.identity_action(k, "right"),
                lambda k: {"a": lab(k)}))
    if include_associativity:
        count, bad = associativity_failure(S)
        reports.append(Report("associativity", bad is None, count,
                              None if bad is None else labs(*bad)))

    n_parts = len(partitions_at_most(S.r, S.n))
    add(_report("count.two_sided_cells", [len(lr.classes)], lambda k: k == n_parts,
                lambda k: {"two_sided_cells": k, "partitions": n_parts}))
    add(_report("count.distinguished_cover", [sum(len(left.cell(d)) for d in D)],
                lambda k: k == S.size, lambda k: {"sum": k, "size": S.size}))
    add(_report("cellmodule.homomorphism", [S], lambda s: cell_module_failure(s) is None,
                lambda s: cell_module_failure(s)))
    return reports


def cell_module_failure(S: "QSchurAlgebra") -> dict | None:
    """Check action(theta_b theta_b') = action(b) action(b') on every left cell module."""
    from .qschur import QSchurElement
    from .exactarith import LaurentPoly
    for cell in S.left_cells:
        mod = S.cell_module(cell)
        m = len(cell)
        mats = {b: mod.action(b) for b in range(S.size)}
        for b in range(S.size):
            for bp in S.by_row.get(S.co[b], ()):
                prod = QSchurElement(S, dict(S.product_idx(b, bp)))
                lhs = mod.action_of(prod)
                A, B = mats[b], mats[bp]
                for i in range(m):
                    for j in range(m):
                        acc = LaurentPoly()
                        for k in range(m):
                            if A[i][k] and B[k][j]:
                                acc = acc + A[i][k] * B[k][j]
                        if acc != lhs[i][j]:
                            return {"cell": [S.indices[k].label() for k in cell],
                                    "b": S.indices[b].label(), "b'": S.indices[bp].label()}
            for bp in range(S.size):
                if S.co[b] != S.ro[bp]:
                    A, B = mats[b], mats[bp]
                    if any(A[i][k] and B[k][j] for i in range(m) for k in range(m) for j in range(m)):
                        return {"cell": [S.indices[k].label() for k in cell],
                                "b": S.indices[b].label(), "b'": S.indices[bp].label()}
    return None
