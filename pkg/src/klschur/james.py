"""Specialisations of A = Z[v, v^-1] and the rank report behind James' criterion.

``phi_e`` sends v to zeta_{2e} in Q(zeta_{2e}); ``phi_l`` sends v to a unit t of
F_l with ord(t^2) = e.  The report compares ranks of the specialised
change-of-basis matrix M and of the monomial matrix D = M^T P^-1 M.
"""

from __future__ import annotations

import os
import warnings
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Sequence

from . import linalg
from .celltrace import TraceForm, WedderburnData
from .errors import DenominatorVanishes, NoSuitableImage
from .exactarith import (CyclotomicTarget, PrimeFieldTarget, cyclotomic_to_prime, is_prime,
                         multiplicative_order, specialize)
from .qschur import QSchurAlgebra


@dataclass(frozen=True)
class Specialization:
    """A ring map out of A: ``kind`` is "cyclotomic" (v -> zeta_2e) or "primefield" (v -> t mod l)."""
    kind: str
    e: int
    ell: int | None = None
    v_image: int | None = None

    @property
    def target(self):
        if self.kind == "cyclotomic":
            return CyclotomicTarget(2 * self.e)
        return PrimeFieldTarget(self.ell, self.v_image)

    def __call__(self, x):
        return specialize(x, self.target)

    def matrix(self, A: Sequence[Sequence]) -> list[list]:
        return [[self(x) for x in row] for row in A]

    def factors_through_cyclotomic(self) -> bool:
        """True when t is a root of Phi_{2e} mod l, i.e. ord(t) = 2e."""
        return self.kind == "primefield" and multiplicative_order(self.v_image, self.ell) == 2 * self.e

    def negated(self) -> "Specialization":
        """The other square root -t of the same q = t^2."""
        return Specialization(self.kind, self.e, self.ell, (-self.v_image) % self.ell)

    def to_json(self) -> dict:
        if self.kind == "cyclotomic":
            return {"kind": "cyclotomic", "e": self.e}
        return {"kind": "primefield", "e": self.e, "ell": self.ell, "vImage": self.v_image}


def cyclotomic_specialization(e: int) -> Specialization:
    if e < 1:
        raise ValueError("e must be positive")
    return Specialization("cyclotomic", e)


def make_prime_specialization(ell: int, e: int, v_image: int | None = None) -> Specialization:
    """v -> t in F_l with ord(t^2) = e.

    Without ``v_image`` the smallest t of multiplicative order 2e is chosen, so
    that the map factors through Z[zeta_2e].
    """
    if not is_prime(ell):
        raise ValueError(f"{ell} is not prime")
    if e < 1:
        raise ValueError("e must be positive")
    if v_image is not None:
        t = v_image % ell
        if t == 0 or multiplicative_order(t * t % ell, ell) != e:
            raise NoSuitableImage(f"v -> {v_image} does not give ord(v^2) = {e} in F_{ell}")
        return Specialization("primefield", e, ell, t)
    for t in range(2, ell):
        if multiplicative_order(t, ell) == 2 * e:
            return Specialization("primefield", e, ell, t)
    if e == 1 and ell == 2:
        return Specialization("primefield", e, ell, 1)
    raise NoSuitableImage(f"F_{ell} has no element of order {2 * e}")


def exact_rank(matrix: Sequence[Sequence], pivoting: str = "first") -> int:
    """Rank of an already specialised matrix over its (exact) field."""
    return linalg.rank([list(row) for row in matrix], pivoting=pivoting)


def specialized_rank(spec: Specialization, matrix) -> int:
    return exact_rank(spec.matrix(matrix))


def factorization_holds(spec: Specialization, matrix) -> bool:
    """phi_l(x) = phi^e_l(phi_e(x)) entrywise; requires ord(t) = 2e."""
    cyc = cyclotomic_specialization(spec.e)
    for row in matrix:
        for x in row:
            if cyclotomic_to_prime(cyc(x), spec.ell, spec.v_image) != spec(x):
                return False
    return True


@dataclass
class PrimeRank:
    ell: int
    v_image: int
    rank_M: int
    rank_D: int | None
    b: int | None
    factorization: bool | None
    outside_hypothesis: bool
    note: str = ""

    def to_json(self) -> dict:
        return {"ell": self.ell, "vImage": self.v_image, "rankM": self.rank_M, "rankD": self.rank_D,
                "b": self.b, "factorization": self.factorization,
                "outsideHypothesis": self.outside_hypothesis, "note": self.note}


@dataclass
class RankReport:
    n: int
    r: int
    e: int
    tau_config: dict
    rank_generic: int
    rank_cyclotomic: int
    a: int | None
    per_prime: list[PrimeRank] = field(default_factory=list)
    hypothesis_checks: dict = field(default_factory=dict)
    inequality_chain: dict = field(default_factory=dict)
    cross_prime_equal: bool = True

    @property
    def chain_holds(self) -> bool:
        """Every link that is implied by the report's own premises holds."""
        c = self.inequality_chain
        required = [k for k in c if not k.endswith("_premise")]
        if not c.get("rankD_le_rankM_premise", True):
            required.remove("rankD_le_rankM")
        return all(c[k] for k in required)

    def to_json(self) -> dict:
        return {
            "n": self.n, "r": self.r, "e": self.e, "tauConfig": self.tau_config,
            "rankGeneric": self.rank_generic, "rankCyclotomic": self.rank_cyclotomic,
            "a": self.a, "perPrime": [p.to_json() for p in self.per_prime],
            "hypothesisChecks": self.hypothesis_checks,
            "inequalityChain": self.inequality_chain, "crossPrimeEqual": self.cross_prime_equal,
        }


def _count_nonvanishing(spec: Specialization, values) -> int | None:
    try:
        return sum(1 for x in values if spec(x))
    except DenominatorVanishes:
        return None


def _in_A(x) -> bool:
    return x.is_in_A() if hasattr(x, "is_in_A") else False


def _threads() -> int:
    try:
        return max(1, int(os.environ.get("KLSCHUR_THREADS", "1")))
    except ValueError:
        return 1


def james_report(form: TraceForm, e: int, primes: Sequence[int],
                 v_images: dict[int, int] | None = None, both_lifts: bool = False,
                 allow_small_ell: bool = False, data: WedderburnData | None = None) -> RankReport:
    """Ranks of phi_e(M), phi_l(M), phi_l(D) and the hypotheses of the criterion for one tau.

    ``a`` and ``b`` count the nonzero entries of phi_e(D) and phi_l(D), i.e.
    Schur elements with the multiplicity with which they occur on D.
    """
    S: QSchurAlgebra = form.algebra
    W = data or WedderburnData(form)
    n = S.size
    small = [ell for ell in primes if ell <= S.r]
    if small and not allow_small_ell:
        raise ValueError(f"primes {small} do not exceed r = {S.r}; allow them explicitly (--allow-small-ell)")
    if small:
        warnings.warn(f"primes {small} are outside the range l > r covered by the theorem")

    diag_entries = [W.D[c][S.tr[c]] for c in range(n)]
    cyc = cyclotomic_specialization(e)
    rank_cyc = specialized_rank(cyc, W.M)
    a = _count_nonvanishing(cyc, diag_entries)

    specs: list[Specialization] = []
    for ell in sorted(primes):
        spec = make_prime_specialization(ell, e, (v_images or {}).get(ell))
        specs.append(spec)
        if both_lifts and spec.negated().v_image != spec.v_image:
            specs.append(spec.negated())

    def per_prime(spec: Specialization) -> PrimeRank:
        rank_M = specialized_rank(spec, W.M)
        note = ""
        try:
            phi_D = spec.matrix(W.D)
            rank_D = exact_rank(phi_D)
        except DenominatorVanishes as exc:
            rank_D, note = None, str(exc)
        b = _count_nonvanishing(spec, diag_entries)
        fac = factorization_holds(spec, W.M) if spec.factors_through_cyclotomic() else None
        return PrimeRank(spec.ell, spec.v_image, rank_M, rank_D, b, fac, spec.ell <= S.r, note)

    with ThreadPoolExecutor(max_workers=_threads()) as pool:
        rows = list(pool.map(per_prime, specs))

    schur_in_A = all(_in_A(x) for x in W.schur_elements.values())
    pinv_in_A = all(_in_A(x) for row in W.gram_inv for x in row)
    pinv_M = linalg.matmul(W.gram_inv, W.M, W.M[0][0] * 0)
    counts_match = (a == rank_cyc and all(p.b == rank_cyc for p in rows if not p.outside_hypothesis))
    hyp = {"schurElementsInA": schur_in_A, "gramInverseInA": pinv_in_A,
           "gramInverseTimesMInA": all(_in_A(x) if x else True for row in pinv_M for x in row),
           "countsEqualCyclotomicRank": counts_match}

    # phi_l(D) = phi_l(M)^T phi_l(P^-1) phi_l(M) only makes sense when P^-1 and D lie over A.
    premise = pinv_in_A and schur_in_A
    chain = {
        "rankD_le_rankM": all(p.rank_D <= p.rank_M for p in rows if p.rank_D is not None),
        "rankD_le_rankM_premise": premise,
        "rankM_le_rankCyclotomic": all(p.rank_M <= rank_cyc for p in rows if p.factorization),
        "rankCyclotomic_le_generic": rank_cyc <= n,
        "rankD_equals_b": all(p.rank_D == p.b for p in rows if p.rank_D is not None),
    }
    in_range = [p.rank_M for p in rows if not p.outside_hypothesis]
    return RankReport(S.n, S.r, e, form.to_json(), n, rank_cyc, a, rows, hyp, chain,
                      len(set(in_range)) <= 1)


__all__ = [
    "Specialization", "cyclotomic_specialization", "make_prime_specialization",
    "exact_rank", "specialized_rank", "factorization_holds", "PrimeRank", "RankReport",
    "james_report",
]
