import pytest

from conftest import failures, schur, wedderburn
from klschur.celltrace import (TraceForm, dual_basis, iso_classes, matrix_units, tau,
                               verify_wedderburn)
from klschur.exactarith import LaurentPoly, RationalFunction, parse_ratfunc
from klschur.qschur import QSchurElement

v = LaurentPoly.v()


def test_iso_classes_at_22(s22):
    classes = iso_classes(s22)
    assert sorted(len(c.cells) for c in classes) == [1, 3]
    for c in classes:
        assert c.dimension == len(c.cells)
    assert sorted(c.shape for c in classes) == [(1, 1), (2,)]
    assert len(iso_classes(schur(1, 1))) == 1


def test_tau_identity(s22):
    form = TraceForm(s22)
    assert tau(s22.identity(), form) == LaurentPoly(4)
    scaled = TraceForm(s22, {c.ordinal: "v" for c in form.classes if c.dimension == 1})
    assert scaled.tau(s22.identity()) == RationalFunction(3 * v + 1, v)


def test_dual_basis_at_11():
    # tau(theta) = 1/c, so the dual is c * theta; then B = theta, M = (1), D = (c)
    S = schur(1, 1)
    form = TraceForm(S, ["v^2"])
    (dual,) = dual_basis(form)
    assert dual == QSchurElement.theta(S, 0) * v ** 2
    W = wedderburn(1, 1, ("v^2",))
    assert W.basis[0] == QSchurElement.theta(S, 0)
    assert W.M == [[LaurentPoly(1)]] and W.D == [[v ** 2]]


def test_gram_inverse_reproduces_dual_pairing(s22):
    W = wedderburn(2, 2)
    for a in range(s22.size):
        for b in range(s22.size):
            assert W.bilinear(W.dual[a], W.dual[b]) == W.gram_inv[a][b]


def test_matrix_units_on_largest_cell(s22):
    W = wedderburn(2, 2)
    cell = max(s22.left_cells, key=len)
    units = matrix_units(cell, W)
    checked = 0
    for (a, b), x in units.items():
        for (a2, b2), y in units.items():
            expected = units[(a, b2)] if b == a2 else QSchurElement(s22, {})
            assert x * y == expected
            checked += 1
    assert checked == 81


def test_M_and_D_at_22(s22):
    W = wedderburn(2, 2)
    assert all(x.is_in_A() for row in W.M for x in row)
    assert all(x in (LaurentPoly(), LaurentPoly(1)) for row in W.D for x in row)
    # theta_{(lam,e,lam)} only involves B-elements of the same shape
    for a in s22.identity().coords:
        for c, m in enumerate(W.M[a]):
            if m:
                assert (s22.ro[c], s22.co[c]) == (s22.ro[a], s22.co[a])


def test_rescaling_changes_only_the_scaled_class(s22):
    base = wedderburn(2, 2)
    classes = iso_classes(s22)
    big = next(c.ordinal for c in classes if c.dimension == 3)
    small = next(c.ordinal for c in classes if c.dimension == 1)
    values = [None, None]
    values[big], values[small] = "2", "v"
    W = wedderburn(2, 2, tuple(values))
    nonzero = sorted(str(x) for row in W.D for x in row if x)
    assert nonzero == ["2"] * 9 + ["v"]
    # theta_c theta_d^v = c_d B_c rescales with its class; the Wedderburn elements do not move
    form = W.form
    for c in range(s22.size):
        d = W.d_of[c]
        factor = RationalFunction.coerce(form.schur_of(c))
        assert W.theta_times_dual(c, d) == base.theta_times_dual(c, d) * factor
        assert W.basis[c] == base.basis[c]
    assert W.M == base.M


def test_schur_overrides_validate(s22):
    with pytest.raises(ValueError):
        TraceForm(s22, {0: "0"})
    with pytest.raises(ValueError):
        TraceForm(s22, {7: "1"})
    assert TraceForm(s22, {0: parse_ratfunc("v+1")}).schur_by_class[0] == v + 1


@pytest.mark.parametrize("n,r,schur_elements", [
    (1, 1, None), (1, 1, ("v^-1",)), (2, 2, None), (2, 2, ("2", "v")), (2, 3, None), (3, 2, None)])
def test_wedderburn_suite(n, r, schur_elements):
    W = wedderburn(n, r, schur_elements)
    assert not failures(verify_wedderburn(W))
