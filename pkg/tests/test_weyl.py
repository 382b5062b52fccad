import itertools
from math import comb, factorial

import pytest
from hypothesis import given, strategies as st

from klschur.weyl import (Composition, Permutation, all_permutations, bruhat_leq, compositions,
                          double_coset_reps, is_minimal_rep, longest_element, maximal_reps,
                          partitions_at_most, rs_shape, sigma, young_subgroup)


def tableau_leq(y, w):
    """Bruhat order via the sorted-prefix (tableau) criterion."""
    r = len(w)
    for k in range(1, r):
        if any(a > b for a, b in zip(sorted(y[:k]), sorted(w[:k]))):
            return False
    return True


def inversions(w):
    return sum(1 for i, j in itertools.combinations(range(len(w)), 2) if w[i] > w[j])


@pytest.mark.parametrize("r", [1, 2, 3, 4])
def test_bruhat_matches_tableau_criterion(r):
    perms = all_permutations(r)
    for y in perms:
        for w in perms:
            assert bruhat_leq(y, w) == tableau_leq(y, w)


perm4 = st.permutations([1, 2, 3, 4]).map(Permutation)


@given(perm4)
def test_length_is_inversion_count(w):
    assert w.length() == inversions(w)
    assert Permutation.from_word(w.reduced_word(), 4) == w
    assert len(w.reduced_word()) == w.length()


@given(perm4, perm4)
def test_inverse_and_product(x, y):
    e = Permutation.identity(4)
    assert x * x.inverse() == e
    assert (x * y).inverse() == y.inverse() * x.inverse()


def test_parse_forms():
    assert Permutation.parse("s1s2", 3) == Permutation.from_word([1, 2], 3)
    assert Permutation.parse("e", 3) == Permutation.identity(3)
    assert Permutation.parse("3,2,1", 3) == longest_element(3)


@pytest.mark.parametrize("n,r", [(1, 1), (2, 2), (2, 3), (3, 2), (3, 3), (4, 2)])
def test_composition_count(n, r):
    assert len(compositions(n, r)) == comb(n + r - 1, r)


def test_young_subgroup_orders():
    lam = Composition((2, 1, 0))
    Y = young_subgroup(lam)
    assert len(Y) == 2 and Y.longest == Permutation.from_word([1], 3)
    assert len(young_subgroup(Composition((2, 2)))) == 4


@pytest.mark.parametrize("lam,mu", [((2, 1, 0), (1, 1, 1)), ((1, 1, 1), (2, 1, 0)),
                                    ((2, 1, 0), (2, 1, 0)), ((2, 2), (3, 1)), ((1, 2, 1), (2, 0, 2))])
def test_double_cosets_partition_the_group(lam, mu):
    lam, mu = Composition(lam), Composition(mu)
    reps = double_coset_reps(lam, mu)
    assert sum(d.size for d in reps) == factorial(sum(lam))
    gl, gm = young_subgroup(lam).generators, young_subgroup(mu).generators
    for d in reps:
        assert is_minimal_rep(d.w_min, lam, mu)
        assert sigma(lam, d.w_min, mu) == d.w_max
        # the maximal element has every generator of both Young subgroups as a descent
        assert gl <= d.w_max.left_descents() and gm <= d.w_max.right_descents()


def test_worked_example_maximal_reps():
    def words(lam, mu):
        return {w.word_str() for w in maximal_reps(Composition(lam), Composition(mu))}
    assert words((2, 1, 0), (1, 1, 1)) == {"s1", "s1s2", "s1s2s1"}
    assert words((1, 1, 1), (2, 1, 0)) == {"s1", "s2s1", "s1s2s1"}
    assert words((2, 1, 0), (2, 1, 0)) == {"s1", "s1s2s1"}


def test_rs_shape_and_partitions():
    assert rs_shape(Permutation.identity(3)) == (3,)
    assert rs_shape(longest_element(3)) == (1, 1, 1)
    assert partitions_at_most(3, 2) == [(3,), (2, 1)]
    assert len(partitions_at_most(4, 4)) == 5
