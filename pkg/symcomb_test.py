from math import factorial, prod

import pytest
from hypothesis import given, strategies as st

from app.symcomb import (
    CompositionError,
    all_perms,
    compositions,
    deodhar_partition,
    dist_reps,
    double_coset,
    double_dist_reps,
    identity,
    in_dist_reps,
    left_mul_simple,
    longest_elements,
    make_composition,
    parse_composition,
    perm_from_word,
    perm_inverse,
    perm_length,
    perm_mul,
    reduced_word,
    right_mul_simple,
    right_coset_reps,
    simple_transposition,
    trivial_intersection_reps,
    young_generators,
    young_subgroup,
)

small_compositions = st.lists(st.integers(1, 3), min_size=1, max_size=3).filter(lambda parts: sum(parts) <= 5)


def young_order(lam):
    return prod(factorial(part) for part in lam)


class TestPermutations:
    def test_length_of_longest(self):
        assert perm_length((3, 2, 1)) == 3
        assert perm_length(identity(4)) == 0

    def test_reduced_words_rebuild_permutations(self):
        for w in all_perms(4):
            word = reduced_word(w)
            assert len(word) == perm_length(w)
            assert perm_from_word(4, word) == w

    def test_inverse(self):
        for w in all_perms(3):
            assert perm_mul(w, perm_inverse(w)) == identity(3)


class TestCompositions:
    def test_enumeration_order(self):
        assert compositions(3) == [(1, 1, 1), (1, 2), (2, 1), (3,)]
        assert len(compositions(4)) == 8

    def test_invalid_parts(self):
        with pytest.raises(CompositionError):
            make_composition((2, 0))
        with pytest.raises(CompositionError):
            make_composition((1, 2), 4)
        with pytest.raises(CompositionError):
            parse_composition("2,x")

    def test_young_generators(self):
        assert young_generators((2, 2)) == frozenset({1, 3})
        assert young_generators((1, 1, 1)) == frozenset()


class TestCosets:
    """Выделенные представители смежных и двойных смежных классов"""

    @pytest.mark.parametrize("lam,count", [((2, 2), 6), ((2, 1, 1), 12), ((4,), 1), ((1, 1, 1, 1), 24)])
    def test_dist_reps_counts(self, lam, count):
        reps = dist_reps(4, lam)
        assert len(reps) == count
        assert all(in_dist_reps(w, lam) for w in reps)

    def test_right_coset_reps_are_inverses(self):
        assert set(right_coset_reps((2, 1))) == {perm_inverse(w) for w in dist_reps(3, (2, 1))}

    def test_double_cosets_partition_group(self):
        mu, lam = (2, 1), (1, 2)
        data = double_dist_reps(mu, lam)
        assert len(data) == 2
        covered = [w for datum in data for w in double_coset(mu, datum.rep, lam)]
        assert sorted(covered) == sorted(all_perms(3))

    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
    def test_double_coset_sizes(self, n):
        for mu in compositions(n):
            for lam in compositions(n):
                covered = set()
                for datum in double_dist_reps(mu, lam):
                    coset = double_coset(mu, datum.rep, lam)
                    assert covered.isdisjoint(coset)
                    covered.update(coset)
                    assert min(perm_length(w) for w in coset) == perm_length(datum.rep)
                    assert len(coset) * young_order(datum.nu) == young_order(mu) * young_order(lam)
                assert len(covered) == factorial(n)

    def test_trivial_intersections(self):
        assert len(trivial_intersection_reps((1, 1), (1, 1))) == 2
        assert trivial_intersection_reps((2,), (2,)) == []

    def test_longest_elements(self):
        w_n, w_lam, d_lam = longest_elements(3, (2, 1))
        assert w_n == (3, 2, 1)
        assert w_lam == (2, 1, 3)
        assert d_lam == (2, 3, 1)
        assert d_lam in dist_reps(3, (2, 1))

    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
    def test_longest_coset_rep_conjugates_generators(self, n):
        for lam in compositions(n):
            w_n, w_lam, d_lam = longest_elements(n, lam)
            assert d_lam in dist_reps(n, lam)
            assert w_lam in young_subgroup(lam)
            assert perm_length(w_n) == perm_length(d_lam) + perm_length(w_lam)
            for j in young_generators(lam):
                conjugate = perm_mul(perm_mul(d_lam, simple_transposition(n, j)), perm_inverse(d_lam))
                assert conjugate == simple_transposition(n, d_lam[j - 1])

    def test_deodhar_partition_sizes(self):
        for lam in compositions(4):
            reps = dist_reps(4, lam)
            for i in range(1, 4):
                split = deodhar_partition(lam, i)
                assert len(split.a_set) == len(split.tau_a_set)
                assert len(split.a_set) + len(split.tau_a_set) + len(split.b_set) == len(reps)
                assert set(split.b_index) == set(split.b_set)

    @pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
    def test_deodhar_partition_structure(self, n):
        for lam in compositions(n):
            reps = dist_reps(n, lam)
            lam_gens = young_generators(lam)
            for i in range(1, n):
                split = deodhar_partition(lam, i)
                parts = [set(split.a_set), set(split.tau_a_set), set(split.b_set)]
                assert sum(len(p) for p in parts) == len(reps)
                assert set().union(*parts) == set(reps)
                assert {left_mul_simple(i, a) for a in split.a_set} == parts[1]
                for a in split.a_set:
                    assert perm_length(left_mul_simple(i, a)) == perm_length(a) + 1
                for b in split.b_set:
                    j = split.b_index[b]
                    assert j in lam_gens
                    assert left_mul_simple(i, b) == right_mul_simple(b, j)

    def test_deodhar_index_out_of_range(self):
        with pytest.raises(CompositionError):
            deodhar_partition((2, 1), 3)

    @given(small_compositions)
    def test_factorization_through_young_subgroup(self, parts):
        lam = make_composition(parts)
        n = sum(lam)
        reps, subgroup = dist_reps(n, lam), young_subgroup(lam)
        assert len(reps) * len(subgroup) == factorial(n)
        products = {perm_mul(d, u) for d in reps for u in subgroup}
        assert len(products) == factorial(n)
        for d in reps:
            for u in subgroup:
                assert perm_length(perm_mul(d, u)) == perm_length(d) + perm_length(u)
