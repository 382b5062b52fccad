from functools import lru_cache

import pytest

from klschur.celltrace import TraceForm, WedderburnData
from klschur.hecke import HeckeAlgebra
from klschur.qschur import QSchurAlgebra


@lru_cache(maxsize=None)
def hecke(r: int) -> HeckeAlgebra:
    return HeckeAlgebra(r)


@lru_cache(maxsize=None)
def schur(n: int, r: int) -> QSchurAlgebra:
    return QSchurAlgebra(n, r, hecke=hecke(r))


@lru_cache(maxsize=None)
def wedderburn(n: int, r: int, schur_elements: tuple | None = None) -> WedderburnData:
    return WedderburnData(TraceForm(schur(n, r), list(schur_elements) if schur_elements else None))


@pytest.fixture
def s22():
    return schur(2, 2)


def failures(reports):
    return [(r.property, r.witness) for r in reports if not r.passed]
