import pytest

from conftest import failures, schur
from klschur.asymptotic import (AsymptoticAlgebra, AsymptoticElement, default_forms, j_identity,
                                j_multiply, phi, phi_preimage_check)
from klschur.exactarith import LaurentPoly
from klschur import linalg


@pytest.fixture(scope="module")
def J22():
    return AsymptoticAlgebra(schur(2, 2))


def test_identity_terms(J22):
    assert len(j_identity(J22).coords) == 4
    assert len(j_identity(AsymptoticAlgebra(schur(1, 1))).coords) == 1


def test_distinguished_are_idempotent(J22):
    for d in J22.schur.distinguished_idx:
        t = J22.t(d)
        assert j_multiply(t, t) == t


def test_products_are_basis_or_zero(J22):
    for a in range(J22.size):
        for b in range(J22.size):
            prod = J22.t(a) * J22.t(b)
            assert len(prod.coords) <= 1
            assert all(c == LaurentPoly(1) for c in prod.coords.values())
            assert prod.is_integral()


def test_phi_identity_and_two_paths(J22):
    S = J22.schur
    assert phi(J22, S.identity()) == j_identity(J22)
    for a in S.identity().coords:
        assert J22.phi_theta(a) == J22.phi_theta_by_cells(a)
    assert linalg.det(J22.phi_matrix) != 0


def test_element_arithmetic(J22):
    x = AsymptoticElement(J22, {0: LaurentPoly(2)})
    assert x - x == AsymptoticElement(J22, {})
    assert (x * 3).coefficient(0) == LaurentPoly(6)


@pytest.mark.parametrize("n,r", [(1, 1), (2, 2), (2, 3), (3, 2)])
def test_suites(n, r):
    S = schur(n, r)
    J = AsymptoticAlgebra(S)
    assert not failures(J.verify())
    reports = phi_preimage_check(J, default_forms(S))
    assert not failures(reports)
    assert any(x.property == "preimages.trace_form_independent" for x in reports)
