"""Exhaustive checks of the Hecke-algebra cell properties P1-P11, P13-P15.

There is no P12 in the list being checked; nothing is reported under that name.
"""

from __future__ import annotations

from typing import TYPE_CHECKING, Callable, Iterable


if TYPE_CHECKING:
    from .hecke import HeckeAlgebra, Report


def _first_failure(cases: Iterable, predicate: Callable) -> tuple[int, object]:
    count = 0
    for case in cases:
        count += 1
        if not predicate(case):
            return count, case
    return count, None


def _report(name, cases, predicate, describe) -> "Report":
    from .hecke import Report
    count, bad = _first_failure(cases, predicate)
    if bad is None:
        return Report(name, True, count)
    return Report(name, False, count, describe(bad))


def nonzero_gammas(alg: "HeckeAlgebra") -> dict[tuple[int, int, int], int]:
    """All nonzero gamma_{x,y,z}, read off the g-table."""
    out = {}
    for x in range(alg.size):
        for y in range(alg.size):
            for z_inv, c in alg.g_idx(x, y).items():
                k = c.coefficient(alg.a_idx(z_inv))
                if k:
                    out[(x, y, alg.inverse[z_inv])] = k
    return out


def verify_hecke(alg: "HeckeAlgebra", include_p15: bool = True) -> list["Report"]:
    from .hecke import Report, kl_by_bar_invariance, p15_sides

    el = alg.elements
    N = range(alg.size)
    inv = alg.inverse
    a = [alg.a_idx(z) for z in N]
    delta = alg._delta
    D = alg._distinguished
    left, right, lr = alg.cells_idx()
    gam = nonzero_gammas(alg)

    def g(x, y):
        return gam.get((x, y), None)

    def w(k):
        return el[k].word_str()

    def ws(*ks):
        return {"elements": [w(k) for k in ks]}

    pairs = [(x, y) for y in N for x in left.below(y)]
    pairs_r = [(x, y) for y in N for x in right.below(y)]
    pairs_lr = [(x, y) for y in N for x in lr.below(y)]
    reports = []

    reports.append(_report("P1", N, lambda z: a[z] <= delta[z],
                           lambda z: {"z": w(z), "a": a[z], "Delta": delta[z]}))
    reports.append(_report(
        "P2", [k for k in gam if k[2] in D], lambda k: k[0] == inv[k[1]],
        lambda k: {"x": w(k[0]), "y": w(k[1]), "d": w(k[2])}))

    def p3(y):
        return sum(1 for d in D if (inv[y], y, d) in gam) == 1
    reports.append(_report("P3", N, p3, lambda y: {"y": w(y)}))
    reports.append(_report("P4", pairs_lr, lambda p: a[p[0]] >= a[p[1]],
                           lambda p: ws(*p)))
    reports.append(_report(
        "P5", [(y, d) for y in N for d in D if (inv[y], y, d) in gam],
        lambda p: gam[(inv[p[0]], p[0], p[1])] in (1, -1), lambda p: ws(*p)))
    reports.append(_report("P6", sorted(D), lambda d: inv[d] == d, lambda d: {"d": w(d)}))
    reports.append(_report(
        "P7", sorted(gam),
        lambda k: gam.get((k[1], k[2], k[0])) == gam[k] and gam.get((k[2], k[0], k[1])) == gam[k],
        lambda k: ws(*k)))
    reports.append(_report(
        "P8", sorted(gam),
        lambda k: (left.equiv(k[0], inv[k[1]]) and left.equiv(k[1], inv[k[2]])
                   and left.equiv(k[2], inv[k[0]])),
        lambda k: ws(*k)))
    for name, prs, pre in (("P9", pairs, left), ("P10", pairs_r, right), ("P11", pairs_lr, lr)):
        reports.append(_report(name, prs, lambda p, pre=pre: a[p[0]] != a[p[1]] or pre.equiv(*p),
                               lambda p: ws(*p)))

    def p13(cell):
        ds = [d for d in cell if d in D]
        return len(ds) == 1 and all((inv[y], y, ds[0]) in gam for y in cell)
    reports.append(_report("P13", left.classes, p13,
                           lambda c: {"cell": [w(k) for k in c]}))
    reports.append(_report("P14", N, lambda x: lr.equiv(x, inv[x]), lambda x: {"x": w(x)}))

    if include_p15:
        def p15(triple):
            wk, xp, x = triple
            lhs, rhs = p15_sides(alg, wk, xp, x)
            for y in set(lhs) | set(rhs):
                if a[y] == a[wk] and lhs.get(y) != rhs.get(y):
                    return False
            return True
        reports.append(_report(
            "P15", ((wk, xp, x) for wk in N for xp in N for x in N), p15,
            lambda t: {"w": w(t[0]), "x'": w(t[1]), "x": w(t[2])}))

    # Structural facts used elsewhere.
    reports.append(_report(
        "kl.bar_invariance", [alg._kl == kl_by_bar_invariance(alg)], bool, lambda _: {}))
    reports.append(_report(
        "kl.degree_bound", ((y, x) for x in N for y in alg._kl[x] if y != x),
        lambda p: alg._kl[p[1]][p[0]].degree < 0, lambda p: ws(*p)))
    reports.append(_report(
        "kl.positivity", ((y, x) for x in N for y in alg._kl[x]),
        lambda p: all(c > 0 for _, c in alg._kl[p[1]][p[0]]), lambda p: ws(*p)))
    reports.append(_report(
        "g.inverse_symmetry", ((x, y) for x in N for y in N),
        lambda p: {inv[z]: c for z, c in alg.g_idx(*p).items()} == alg.g_idx(inv[p[1]], inv[p[0]]),
        lambda p: ws(*p)))
    reports.append(_report(
        "g.integrality", ((x, y) for x in N for y in N),
        lambda p: all(c.is_in_A() for c in alg.g_idx(*p).values()), lambda p: ws(*p)))
    reports.append(_report(
        "cells.left_and_right_meet_trivially", ((x, y) for y in N for x in left.cell(y)),
        lambda p: p[0] == p[1] or not right.equiv(*p), lambda p: ws(*p)))
    reports.append(_report(
        "cells.a_constant_on_two_sided", lr.classes,
        lambda c: len({a[k] for k in c}) == 1, lambda c: {"cell": [w(k) for k in c]}))
    reports.append(_report(
        "cells.left_refines_two_sided", left.classes,
        lambda c: len({lr.class_of[k] for k in c}) == 1, lambda c: {"cell": [w(k) for k in c]}))
    reports.append(_report(
        "cells.right_is_inverse_of_left", ((x, y) for x in N for y in N),
        lambda p: left.leq(*p) == right.leq(inv[p[0]], inv[p[1]]), lambda p: ws(*p)))
    reports.append(_report("eqLCHa", [alg], lambda h: verify_equal_cell_products(h) is None,
                           lambda h: verify_equal_cell_products(h)))
    return reports


def verify_equal_cell_products(alg: "HeckeAlgebra") -> dict | None:
    """C_x D_{y^-1} = C_z D_{w^-1} whenever x ~L y, z ~L w, x ~R z, y ~R w.

    Here D_{y^-1} is the element dual to C_y, i.e. ``standard_dual_basis(y)``:
    that is the reading under which tau(C_u C_x D_{y^-1}) = g_{u,x,y}.  Products
    are formed in the T-basis.  Returns a witness on failure, None on success.
    """
    left, right, _ = alg.cells_idx()
    duals = [alg.standard_dual_basis(alg.elements[k]) for k in range(alg.size)]
    cache: dict = {}

    def prod(x, y):
        key = (x, y)
        if key not in cache:
            cache[key] = alg._t_mul(alg._kl[x], duals[y].coords)
        return cache[key]

    for x in range(alg.size):
        for y in left.cell(x):
            for z in right.cell(x):
                for wk in right.cell(y):
                    if left.equiv(z, wk) and prod(x, y) != prod(z, wk):
                        el = alg.elements
                        return {"x": el[x].word_str(), "y": el[y].word_str(),
                                "z": el[z].word_str(), "w": el[wk].word_str()}
    return None


__all__ = ["verify_hecke", "verify_equal_cell_products", "nonzero_gammas"]

