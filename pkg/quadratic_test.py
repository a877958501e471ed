from itertools import product

import pytest

from app.linalg import Subspace, intersect_all, sum_all
from app.quadratic import (
    QuadraticAlgebra,
    component_dims,
    frobenius_check,
    hilbert_convolution,
    hilbert_duality_check,
    ideal_component,
    koszul_complex_homology,
    koszul_exactness,
    left_kernel_check,
    multiplication_pairing,
    quadratic_dual,
    shifted_relations,
    upsilon,
)
from app.heckesym import ext_relations, sym_relations


def normal_word_count(alg, n):
    """Слова длины n без старших мономов соотношений (PBW-базис)"""
    leading = {divmod(p, alg.d) for p in alg.relations.pivots}
    return sum(1 for word in product(range(alg.d), repeat=n)
               if all((a, b) not in leading for a, b in zip(word, word[1:])))


@pytest.fixture(scope="module")
def plane(r2):
    return sym_relations(r2)


@pytest.fixture(scope="module")
def plane_ext(r2):
    return ext_relations(r2)


class TestComponents:
    """Размерности компонент квадратичных алгебр"""

    def test_quantum_plane(self, plane, plane_ext):
        assert component_dims(plane, 6) == [1, 2, 3, 4, 5, 6, 7]
        assert component_dims(plane_ext, 3) == [1, 2, 1, 0]

    def test_exterior_of_three(self, r3):
        assert component_dims(ext_relations(r3), 4) == [1, 3, 3, 1, 0]

    def test_counterexample(self, counterexample):
        s_alg, l_alg = sym_relations(counterexample), ext_relations(counterexample)
        assert component_dims(s_alg, 3) == [1, 2, 2, 0]
        assert component_dims(l_alg, 3) == [1, 2, 2, 0]
        assert component_dims(quadratic_dual(s_alg), 3) == [1, 2, 2, 0]

    @pytest.mark.parametrize("symmetry,builder,degree,expected", [
        ("r2", sym_relations, 6, [1, 2, 3, 4, 5, 6, 7]),
        ("r3", sym_relations, 4, [1, 3, 6, 10, 15]),
        ("r2", ext_relations, 4, [1, 2, 1, 0, 0]),
        ("r3", ext_relations, 4, [1, 3, 3, 1, 0]),
    ])
    def test_normal_words_count_components(self, request, symmetry, builder, degree, expected):
        alg = builder(request.getfixturevalue(symmetry))
        assert [normal_word_count(alg, n) for n in range(degree + 1)] == expected
        assert component_dims(alg, degree) == expected

    def test_ideal_is_sum_of_shifts(self, plane):
        shifts = [shifted_relations(plane, 4, i) for i in (1, 2, 3)]
        assert ideal_component(plane, 4) == sum_all(plane.field, 16, shifts)

    def test_upsilon_is_intersection(self, plane_ext):
        shifts = [shifted_relations(plane_ext, 3, i) for i in (1, 2)]
        assert upsilon(plane_ext, 3) == intersect_all(plane_ext.field, 8, shifts)

    def test_dual_of_dual(self, plane):
        assert quadratic_dual(quadratic_dual(plane)) is plane
        assert quadratic_dual(plane).label == "S(drinfeld_jimbo:2)!"

    def test_shift_out_of_range(self, plane):
        with pytest.raises(ValueError):
            shifted_relations(plane, 3, 3)

    def test_relations_ambient_checked(self, field_two):
        with pytest.raises(ValueError):
            QuadraticAlgebra(2, field_two, Subspace.zero(field_two, 3))


class TestKoszul:
    def test_quantum_plane_is_koszul(self, plane, plane_ext):
        for n in range(2, 6):
            assert not any(koszul_complex_homology(plane, n))
            assert not any(koszul_complex_homology(plane_ext, n))

    def test_graded_report(self, plane):
        report = koszul_exactness(plane, 4)
        assert report.exact
        assert report.koszul_through == 4
        assert report.failing_degrees() == []
        assert report.to_dict()["dims"] == [1, 2, 3, 4, 5]

    def test_root_of_unity(self, cyclo3):
        from app.heckesym import drinfeld_jimbo
        r = drinfeld_jimbo(cyclo3, 2)
        s_alg, l_alg = sym_relations(r), ext_relations(r)
        for n in range(2, 7):
            assert not any(koszul_complex_homology(s_alg, n))
            assert not any(koszul_complex_homology(l_alg, n))
        assert hilbert_duality_check(component_dims(s_alg, 6), component_dims(l_alg, 6), 6) == (True, None)

    def test_needs_degree_two(self, plane):
        with pytest.raises(ValueError):
            koszul_exactness(plane, 1)


class TestHilbertSeries:
    def test_convolution(self):
        assert hilbert_convolution([1, 2, 3], [1, 2, 1], 2) == [1, 0, 0]

    def test_quantum_plane_duality(self, plane, plane_ext):
        assert hilbert_duality_check(component_dims(plane, 6), component_dims(plane_ext, 6), 6) == (True, None)

    def test_counterexample_fails_in_degree_four(self, counterexample):
        s_dims = component_dims(sym_relations(counterexample), 4)
        l_dims = component_dims(ext_relations(counterexample), 4)
        assert hilbert_duality_check(s_dims, l_dims, 3) == (True, None)
        assert hilbert_duality_check(s_dims, l_dims, 4) == (False, 4)

    def test_short_input(self):
        with pytest.raises(ValueError):
            hilbert_convolution([1], [1, 1], 1)


class TestFrobenius:
    """Спаривания в верхней степени"""

    def test_exterior_plane(self, plane_ext):
        report = frobenius_check(plane_ext, 2)
        assert report.hypothesis and report.frobenius
        assert report.status == "pass"
        assert report.ranks == {0: 1, 1: 2, 2: 1}

    def test_exterior_of_three(self, r3):
        assert frobenius_check(ext_relations(r3), 3).frobenius

    def test_hypothesis_not_met(self, plane):
        report = frobenius_check(plane, 2)
        assert not report.hypothesis
        assert report.status == "hypothesis-not-met"

    def test_counterexample_top_degree(self, counterexample):
        assert frobenius_check(ext_relations(counterexample), 2).status == "hypothesis-not-met"

    def test_pairing_shape(self, plane_ext):
        pairing = multiplication_pairing(plane_ext, 1, 2)
        assert (pairing.nrows, pairing.ncols) == (2, 2)

    def test_left_kernels_match_annihilators(self, plane_ext):
        for kernel_dim, annihilator_dim in left_kernel_check(plane_ext, 2).values():
            assert kernel_dim == annihilator_dim == 0
