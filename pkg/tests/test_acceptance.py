"""Acceptance criteria 1-9, one status line each.

Every test prints ``criterion N: PASS|FAIL|DEVIATION|SKIPPED (seconds) detail``
straight to the terminal.  DEVIATION means the literal wording of a clause
cannot hold and the test instead asserts the mathematically correct statement
(see the detail text).  Criterion 9 is a non-gating stretch goal: it runs
only with KLSCHUR_STRETCH=1.
"""

import json
import os
import time
from contextlib import contextmanager

import pytest

from klschur import linalg
from klschur.asymptotic import AsymptoticAlgebra, default_forms, phi_preimage_check
from klschur.celltrace import TraceForm, WedderburnData, iso_classes
from klschur.cli import run
from klschur.exactarith import LaurentPoly
from klschur.hecke import HeckeAlgebra
from klschur.james import factorization_holds, james_report, make_prime_specialization
from klschur.qschur import MnrIndex, QSchurAlgebra
from klschur.weyl import Composition, Permutation, maximal_reps, partitions_at_most

ONE = LaurentPoly(1)
v = LaurentPoly.v()


@contextmanager
def criterion(capsys, number, budget=None):
    """Time the block and print its status line whatever the outcome."""
    state = {"status": "PASS", "detail": ""}
    start = time.perf_counter()
    try:
        yield state
    except BaseException as exc:
        state["status"] = "FAIL"
        state["detail"] = f"{type(exc).__name__}: {exc}"[:300]
        raise
    finally:
        elapsed = time.perf_counter() - start
        if budget is not None and elapsed >= budget and state["status"] != "FAIL":
            state["status"] = "FAIL"
            state["detail"] = f"over budget {budget}s; " + state["detail"]
        with capsys.disabled():
            print(f"\ncriterion {number}: {state['status']} ({elapsed:.2f}s) {state['detail']}")
    if budget is not None:
        assert elapsed < budget, f"criterion {number} took {elapsed:.1f}s (budget {budget}s)"


def failed(reports):
    return [(r.property, r.witness) for r in reports if not r.passed]


def test_criterion_1_worked_example(capsys):
    with criterion(capsys, 1, budget=1.0) as st:
        lam = nu = Composition((2, 1, 0))
        mu = Composition((1, 1, 1))

        def words(a, b):
            return {w.word_str() for w in maximal_reps(a, b)}
        assert words(lam, mu) == {"s1", "s1s2", "s1s2s1"}
        assert words(mu, nu) == {"s1", "s2s1", "s1s2s1"}
        assert words(lam, nu) == {"s1", "s1s2s1"}
        S = QSchurAlgebra(3, 3)
        P = Permutation.parse
        assert S.hecke.g(P("s1", 3), P("s2s1", 3), P("s1s2s1", 3)) == ONE
        assert S.h[S.compositions.index(mu)] == ONE
        a = MnrIndex.parse("2,1,0/e/1,1,1", 3)
        b = MnrIndex.parse("1,1,1/s2/2,1,0", 3)
        c = MnrIndex.parse("2,1,0/s2/2,1,0", 3)
        a2 = MnrIndex.parse("1,1,1/s1/1,1,1", 3)
        assert S.f_constant(a, b, c) == ONE
        assert S.f_constant(a2, b, c) == LaurentPoly()
        st["detail"] = "D+ sets, g = 1, h_mu = 1, f_abc = 1, f_a'bc = 0"


def test_criterion_2_hecke_suite(capsys):
    with criterion(capsys, 2, budget=60) as st:
        required = {f"P{i}" for i in (1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 13, 14)}
        checked = 0
        for r in (2, 3, 4):
            reports = HeckeAlgebra(r).verify(include_p15=r <= 3)
            names = {x.property for x in reports}
            assert required <= names
            assert ("P15" in names) == (r <= 3)
            assert not failed(reports), failed(reports)
            checked += sum(x.checked for x in reports)
        st["detail"] = f"P1-P11, P13, P14 for r=2,3,4; P15 for r=2,3; {checked} cases"


SIZES = [(1, 1), (2, 2), (2, 3), (3, 2)]


def test_criterion_3_qschur_suite(capsys):
    with criterion(capsys, 3, budget=120) as st:
        required = {f"Q{i}" for i in (1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 13, 14, 15)}
        required |= {"LReq", "sigmale.L", "sigmale.R", "sigmale.LR", "roco.L", "roco.R",
                     "lem3", "rightcells"}
        checked = 0
        for n, r in SIZES:
            reports = QSchurAlgebra(n, r).verify(include_associativity=False)
            assert required <= {x.property for x in reports}
            assert not failed(reports), (n, r, failed(reports))
            checked += sum(x.checked for x in reports)
        st["detail"] = f"{len(required)} named properties at {SIZES}; {checked} cases"


def test_criterion_4_algebra_sanity(capsys):
    with criterion(capsys, 4) as st:
        from klschur._qschur_checks import associativity_failure
        triples = 0
        for n, r in SIZES:
            S = QSchurAlgebra(n, r)
            count, bad = associativity_failure(S)
            assert bad is None, (n, r, bad)
            triples += count
            one = S.identity()
            lam_e_lam = {S.index[MnrIndex(lam, Permutation.identity(r), lam)] for lam in S.compositions}
            assert set(one.coords) == lam_e_lam
            for k in range(S.size):
                assert S.identity_action(k, "left") == {k: 1} == S.identity_action(k, "right")
            for a in range(S.size):
                for b in S.by_row.get(S.co[a], ()):
                    assert all(f.is_in_A() for f in S.product_idx(a, b).values())
        st["detail"] = f"{triples} composable triples associative; identity neutral; f in A"


def test_criterion_5_wedderburn_at_22(capsys):
    with criterion(capsys, 5, budget=60) as st:
        S = QSchurAlgebra(2, 2)
        W = WedderburnData(TraceForm(S))
        reports = W.verify()
        names = {x.property for x in reports}
        required = {"dual.left", "dual.right", "matrix_units", "central_idempotent.idempotent",
                    "central_idempotent.central", "central_idempotent.sum_is_one",
                    "wedderburn.product_law", "wedderdual.pairing", "wedderselfdual.permutation",
                    "Sqcontained.M_in_A", "diag.monomial", "diag.entries"}
        assert required <= names
        assert not failed(reports), failed(reports)
        by_name = {x.property: x for x in reports}
        assert by_name["dual.left"].checked == 100 and by_name["wedderburn.product_law"].checked > 0
        classes = iso_classes(S)
        rescaled = WedderburnData(TraceForm(S, ["2", "v"]))
        assert not failed(rescaled.verify())
        entries = sorted(str(x) for row in rescaled.D for x in row if x)
        dims = [c.dimension for c in classes]
        assert entries == sorted(["2"] * dims[0] ** 2 + ["v"] * dims[1] ** 2)
        st["detail"] = (f"{len(reports)} checks pass; c=(2,v) gives D entries "
                        f"2 x{dims[0] ** 2}, v x{dims[1] ** 2}")


def test_criterion_6_asymptotic(capsys):
    with criterion(capsys, 6, budget=120) as st:
        total = 0
        for n, r in [(2, 2), (2, 3), (3, 2)]:
            S = QSchurAlgebra(n, r)
            J = AsymptoticAlgebra(S)
            reports = J.verify() + phi_preimage_check(J, default_forms(S))
            names = {x.property for x in reports}
            assert {"J.associativity", "J.identity", "phi.unital", "phi.homomorphism",
                    "phi.invertible", "preimages.form0", "preimages.form1",
                    "preimages.trace_form_independent"} <= names
            assert not failed(reports), (n, r, failed(reports))
            total += len(reports)
        st["detail"] = f"{total} checks at (2,2), (2,3), (3,2) with two trace forms"


def test_criterion_7_rank_pipeline(capsys):
    with criterion(capsys, 7, budget=30) as st:
        S = QSchurAlgebra(2, 2)
        W = WedderburnData(TraceForm(S))
        notes = []
        literal_ok = True
        for e, primes in ((2, [5, 13]), (3, [7, 13])):
            rep = james_report(W.form, e, primes, data=W)
            chain = rep.inequality_chain
            assert chain["rankM_le_rankCyclotomic"] and chain["rankCyclotomic_le_generic"]
            assert rep.rank_cyclotomic <= 10
            assert chain["rankD_equals_b"]
            assert rep.cross_prime_equal
            for spec in (make_prime_specialization(ell, e) for ell in primes):
                assert factorization_holds(spec, W.M)
            # the D <= M link is implied only when P^-1 and the Schur elements lie over A
            if chain["rankD_le_rankM_premise"]:
                assert chain["rankD_le_rankM"]
            literal_ok &= chain["rankD_le_rankM"]
            ranks = [(p.ell, p.rank_M, p.rank_D) for p in rep.per_prime]
            notes.append(f"e={e}: rk phi_e(M)={rep.rank_cyclotomic}, (l, rk M, rk D)={ranks}")
        if not literal_ok:
            # det P = -det(M)^2, and det M vanishes at e = 2, so P^-1 cannot lie over A
            assert linalg.det(W.gram) == -(linalg.det(W.M) ** 2)
            st["status"] = "DEVIATION"
            notes.append("rk phi_l(D) <= rk phi_l(M) fails at e=2 as it must: with c=1, "
                         "det P = -det(M)^2 so P^-1 is not over A; the link is reported "
                         "with premise=false; all other clauses hold")
        st["detail"] = "; ".join(notes)


def test_criterion_8_counting(capsys):
    with criterion(capsys, 8) as st:
        facts = []
        for n, r in [(2, 2), (2, 3)]:
            S = QSchurAlgebra(n, r)
            left, _, lr = S.cells_idx()
            assert len(lr.classes) == len(partitions_at_most(r, n))
            assert sum(len(left.cell(d)) for d in S.distinguished_idx) == S.size
            classes = iso_classes(S)
            assert sum(c.dimension ** 2 for c in classes) == S.size
            facts.append(f"({n},{r}): {len(lr.classes)} two-sided cells, |M|={S.size}")
        st["detail"] = "; ".join(facts)


@pytest.mark.skipif(not os.environ.get("KLSCHUR_STRETCH"), reason="set KLSCHUR_STRETCH=1")
def test_criterion_9_stretch_33(capsys):
    with criterion(capsys, 9, budget=1800) as st:
        outputs = []
        for argv in (["qschur", "--n", "3", "--r", "3", "verify"],
                     ["wedderburn", "--n", "3", "--r", "3", "verify", "--skip-triples"]):
            code = run(argv + ["--force", "--json"])
            out = capsys.readouterr().out
            payload = json.loads(out)
            assert code == 0 and payload["ok"], [r for r in payload["result"]["reports"]
                                                  if r["status"] != "pass"]
            outputs.append(len(payload["result"]["reports"]))
        st["detail"] = f"(3,3) Q-suite ({outputs[0]} checks) and Wedderburn suite ({outputs[1]} checks) pass"


def test_criterion_9_reported_when_skipped(capsys):
    if os.environ.get("KLSCHUR_STRETCH"):
        pytest.skip("stretch run enabled")
    with capsys.disabled():
        print("\ncriterion 9: SKIPPED (non-gating stretch goal; run with KLSCHUR_STRETCH=1)")
