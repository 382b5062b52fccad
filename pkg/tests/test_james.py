import pytest
from hypothesis import given, settings, strategies as st

from conftest import schur, wedderburn
from klschur import linalg
from klschur.errors import NoSuitableImage
from klschur.exactarith import LaurentPoly, PrimeFieldElement
from klschur.james import (cyclotomic_specialization, exact_rank, factorization_holds,
                           james_report, make_prime_specialization, specialized_rank)
from klschur.celltrace import TraceForm


@pytest.mark.parametrize("ell,e,t", [(5, 2, 2), (7, 3, 3), (13, 2, 5), (13, 3, 4)])
def test_default_v_images(ell, e, t):
    spec = make_prime_specialization(ell, e)
    assert spec.v_image == t
    assert PrimeFieldElement(ell, t * t).order() == e
    assert spec.factors_through_cyclotomic()


def test_no_suitable_image():
    with pytest.raises(NoSuitableImage):
        make_prime_specialization(7, 7)
    with pytest.raises(NoSuitableImage):
        make_prime_specialization(7, 3, v_image=1)
    assert make_prime_specialization(7, 3, v_image=2).v_image == 2


laurents = st.dictionaries(st.integers(-4, 4), st.integers(-5, 5), max_size=4).map(LaurentPoly)


@settings(max_examples=50)
@given(laurents, laurents)
def test_specializations_are_ring_maps(p, q):
    for spec in (cyclotomic_specialization(3), make_prime_specialization(13, 3)):
        assert spec(p * q) == spec(p) * spec(q)


def test_exact_rank_basics():
    one, zero = PrimeFieldElement(5, 1), PrimeFieldElement(5, 0)
    assert exact_rank(linalg.identity_matrix(10, one, zero)) == 10
    assert exact_rank([[zero] * 4] * 4) == 0


def test_rank_of_D_counts_nonvanishing_schur_elements(s22):
    W = wedderburn(2, 2, ("v+v^-1", "1"))
    spec = make_prime_specialization(5, 2)
    count = sum(1 for c in range(s22.size) if spec(W.D[c][s22.tr[c]]))
    assert specialized_rank(spec, W.D) == count < s22.size


def test_semisimple_specialization_has_full_rank(s22):
    W = wedderburn(2, 2)
    phi_M = cyclotomic_specialization(3).matrix(W.M)
    assert linalg.det(phi_M) != 0
    assert exact_rank(phi_M) == 10


def test_rank_independent_of_pivoting(s22):
    W = wedderburn(2, 2)
    for spec in (make_prime_specialization(5, 2), make_prime_specialization(13, 2)):
        A = spec.matrix(W.M)
        assert exact_rank(A, "first") == exact_rank(A, "last")


def test_factorization_through_cyclotomic(s22):
    W = wedderburn(2, 2)
    for ell, e in ((5, 2), (13, 2), (7, 3), (13, 3)):
        assert factorization_holds(make_prime_specialization(ell, e), W.M)


@pytest.mark.parametrize("e,primes", [(2, [5, 13]), (3, [7, 13])])
def test_report_at_22(s22, e, primes):
    report = james_report(TraceForm(s22), e, primes, data=wedderburn(2, 2), both_lifts=True)
    assert report.chain_holds
    assert report.cross_prime_equal
    chain = report.inequality_chain
    assert chain["rankM_le_rankCyclotomic"] and chain["rankD_equals_b"]
    for row in report.per_prime:
        assert row.rank_M <= report.rank_cyclotomic <= report.rank_generic == 10
    if e == 3:
        assert report.rank_cyclotomic == 10 and chain["rankD_le_rankM"]


def test_D_le_M_link_needs_integral_gram_inverse(s22):
    # with all Schur elements 1, det P = -det(M)^2 and det M = (v + v^-1)^3 vanishes at e = 2
    W = wedderburn(2, 2)
    v = LaurentPoly.v()
    assert linalg.det(W.M) == (v + v ** -1) ** 3
    assert linalg.det(W.gram) == -(v + v ** -1) ** 6
    report = james_report(W.form, 2, [5, 13], data=W)
    assert not report.inequality_chain["rankD_le_rankM_premise"]
    assert not report.hypothesis_checks["gramInverseInA"]


def test_small_primes_need_override(s22):
    form = TraceForm(s22)
    with pytest.raises(ValueError):
        james_report(form, 1, [2], data=wedderburn(2, 2))
    with pytest.warns(UserWarning):
        report = james_report(form, 1, [2], data=wedderburn(2, 2), allow_small_ell=True)
    assert report.per_prime[0].outside_hypothesis
