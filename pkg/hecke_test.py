import pytest
from hypothesis import given, strategies as st

from app.scalars import field_preset
from app.symcomb import all_perms, compositions, dist_reps, trivial_intersection_reps, young_generators
from app.linalg import Matrix
from app.hecke import (
    HeckeElt,
    InvalidRepresentationError,
    PreconditionError,
    RELATION_KINDS,
    alt_hom_dim,
    alternating_rep,
    explicit_eigenbases,
    find_isomorphism,
    free_factor_hom_dim,
    hecke_act,
    hecke_generator,
    hecke_scalar,
    hom_dim_formula,
    hom_space,
    homotopy_check,
    inclusion_check,
    induced_module,
    is_alternating,
    mackey_restrict,
    module_exactness,
    one_dim_rep,
    one_dim_reps,
    parabolic_alt_sum,
    preimage_check,
    rep_from_letters,
    tensor_exactness,
    tilde_rep,
    tilde_twist,
    transpose_module,
    trivial_rep,
    twisted_module,
    zero_hecke_decomposition,
    zero_hecke_gr_action,
)

coefficients = st.lists(st.integers(-2, 2), min_size=6, max_size=6)


def element(field_spec, values):
    terms = {s: field_spec.from_int(c) for s, c in zip(all_perms(3), values) if c}
    return HeckeElt(3, field_spec, field_spec.q, terms)


def all_modules(n, field_spec):
    modules = []
    for lam in compositions(n):
        for chi in one_dim_reps(lam, field_spec.q):
            modules.append(induced_module(n, lam, chi, field_spec))
    return modules


class TestAlgebra:
    """Соотношения H_n(q) в стандартном базисе"""

    def test_quadratic_relation(self, field_two):
        q = field_two.q
        for i in (1, 2):
            t = hecke_generator(3, i, field_two)
            assert t * t == t * (q - 1) + hecke_scalar(3, q, field_two)

    def test_braid_relation(self, gauss):
        t1, t2 = hecke_generator(3, 1, gauss), hecke_generator(3, 2, gauss)
        assert t1 * t2 * t1 == t2 * t1 * t2

    def test_zero_hecke_quadratic(self, field_zero):
        t = hecke_generator(2, 1, field_zero)
        assert t * t == -t

    def test_tilde_twist_on_generators(self, field_two):
        t = hecke_generator(3, 1, field_two)
        assert tilde_twist(t) == hecke_scalar(3, field_two.q - 1, field_two) - t

    def test_alternating_sum_of_two(self, field_two):
        expected = hecke_scalar(2, field_two.q, field_two) - hecke_generator(2, 1, field_two)
        assert parabolic_alt_sum((1, 1), field_two) == expected

    @given(coefficients, coefficients, coefficients)
    def test_associative(self, a, b, c):
        field_spec = field_preset("cyclo3")
        x, y, z = element(field_spec, a), element(field_spec, b), element(field_spec, c)
        assert (x * y) * z == x * (y * z)

    @given(coefficients, coefficients)
    def test_tilde_twist_multiplicative(self, a, b):
        field_spec = field_preset("Q", "3")
        x, y = element(field_spec, a), element(field_spec, b)
        assert tilde_twist(x * y) == tilde_twist(x) * tilde_twist(y)

    def test_action_is_a_homomorphism(self, field_two):
        m = induced_module(3, (1, 1, 1), trivial_rep((1, 1, 1), field_two.q), field_two)
        x, y = element(field_two, [1, 2, 0, -1, 0, 1]), element(field_two, [0, 1, 1, 0, 2, 0])
        assert hecke_act(x * y, m) == hecke_act(x, m) @ hecke_act(y, m)


class TestRepresentations:
    def test_counts(self, field_two, field_minus_one):
        assert len(one_dim_reps((2, 1), field_two.q)) == 2
        assert len(one_dim_reps((2, 2), field_two.q)) == 4
        assert len(one_dim_reps((2, 2), field_minus_one.q)) == 1

    def test_letters(self, field_two):
        chi = rep_from_letters((2, 2), "ta", field_two.q)
        assert chi.letters() == "ta"
        assert tilde_rep(chi).letters() == "at"
        assert is_alternating(alternating_rep((3,), field_two.q))

    def test_invalid_value(self, field_two):
        with pytest.raises(InvalidRepresentationError):
            one_dim_rep((2,), [field_two.from_int(5)], field_two.q)

    def test_invalid_letters(self, field_two):
        with pytest.raises(InvalidRepresentationError):
            rep_from_letters((2, 1), "x", field_two.q)


class TestInducedModules:
    def test_regular_rank_two(self, field_two):
        q = field_two.q
        m = induced_module(2, (1, 1), trivial_rep((1, 1), q), field_two)
        assert m.gens[0] == Matrix.from_dense(field_two, [[0, q], [1, q - 1]])

    def test_dimensions(self, gauss):
        for m in all_modules(4, gauss):
            assert m.dim == len(dist_reps(4, m.lam))

    def test_one_dimensional_block(self, field_two):
        chi = alternating_rep((3,), field_two.q)
        m = induced_module(3, (3,), chi, field_two)
        assert m.dim == 1
        assert all(g == Matrix.scalar(field_two, 1, -field_two.one) for g in m.gens)

    def test_mackey_blocks_cover_basis(self, field_two):
        m = induced_module(3, (2, 1), trivial_rep((2, 1), field_two.q), field_two)
        for mu in compositions(3):
            blocks = mackey_restrict(m, mu)
            assert sorted(k for b in blocks for k in b.basis) == list(range(m.dim))

    @pytest.mark.parametrize("preset,q", [("Q", "2"), ("gauss", None)])
    def test_mackey_blocks_are_submodules(self, preset, q):
        field_spec = field_preset(preset, q)
        for m in all_modules(3, field_spec):
            for mu in compositions(3):
                for block in mackey_restrict(m, mu):
                    span = set(block.basis)
                    for i in young_generators(mu):
                        columns = m.gens[i - 1].columns
                        assert all(set(columns[k]) <= span for k in block.basis), (m.label, mu, i)

    def test_eigenbases(self, cyclo3):
        for m in all_modules(3, cyclo3):
            for i in (1, 2):
                assert explicit_eigenbases(m, i) == (True, True)


class TestHom:
    """Размерности Hom по формуле и по решению линейной системы"""

    @pytest.mark.parametrize("preset,q", [("Q", "2"), ("Q", "-1"), ("gauss", None)])
    def test_formula_matches_solve(self, preset, q):
        field_spec = field_preset(preset, q)
        modules = all_modules(3, field_spec)
        for m in modules:
            for other in modules:
                solved = hom_space(m, other).dim
                assert solved == hom_dim_formula(other.lam, other.chi, m.lam, m.chi)
                assert solved == hom_space(other, m).dim

    def test_formula_needs_nonzero_q(self, field_zero):
        chi = trivial_rep((2,), field_zero.q)
        with pytest.raises(PreconditionError):
            hom_dim_formula((2,), chi, (2,), chi)

    def test_alternating_hom(self, field_two):
        for m in all_modules(3, field_two):
            assert alt_hom_dim(m) == (1 if is_alternating(m.chi) else 0)

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_alternating_hom_at_zero(self, field_zero, n):
        for m in all_modules(n, field_zero):
            assert alt_hom_dim(m) == (1 if is_alternating(m.chi) else 0), m.label

    @pytest.mark.slow
    def test_alternating_hom_at_zero_rank_five(self, field_zero):
        for m in all_modules(5, field_zero):
            assert alt_hom_dim(m) == (1 if is_alternating(m.chi) else 0), m.label

    @pytest.mark.slow
    @pytest.mark.parametrize("preset,q", [("Q", "2"), ("Q", "-1"), ("gauss", None)])
    def test_formula_in_rank_four(self, preset, q):
        field_spec = field_preset(preset, q)
        modules = all_modules(4, field_spec)
        for m in modules:
            for other in modules:
                solved = hom_space(m, other).dim
                assert solved == hom_dim_formula(other.lam, other.chi, m.lam, m.chi), (m.label, other.label)

    def test_twist_and_transpose(self, gauss):
        for m in all_modules(3, gauss):
            twisted = induced_module(3, m.lam, tilde_rep(m.chi), gauss)
            assert find_isomorphism(twisted, twisted_module(m)) is not None
            assert find_isomorphism(transpose_module(m), m) is not None

    def test_non_isomorphic(self, field_two):
        q = field_two.q
        triv = induced_module(2, (2,), trivial_rep((2,), q), field_two)
        alt = induced_module(2, (2,), alternating_rep((2,), q), field_two)
        assert find_isomorphism(triv, alt) is None

    def test_free_factor_at_minus_one(self, field_minus_one):
        q = field_minus_one.q
        trivial = [induced_module(3, lam, trivial_rep(lam, q), field_minus_one) for lam in compositions(3)]
        for m in trivial:
            for other in trivial:
                assert free_factor_hom_dim(m, other) == len(trivial_intersection_reps(other.lam, m.lam))


class TestComplexes:
    @pytest.mark.parametrize("preset,q", [("Q", "2"), ("Q", "-1"), ("gauss", None), ("zero", None)])
    def test_exact_for_all_kinds(self, preset, q):
        field_spec = field_preset(preset, q)
        for m in all_modules(3, field_spec):
            for kind in RELATION_KINDS:
                assert not any(module_exactness(m, kind)), (m.label, kind)

    @pytest.mark.slow
    @pytest.mark.parametrize("preset,q", [("Q", "2"), ("Q", "-1"), ("gauss", None)])
    def test_exact_in_rank_four(self, preset, q):
        field_spec = field_preset(preset, q)
        for m in all_modules(4, field_spec):
            for kind in RELATION_KINDS:
                assert not any(module_exactness(m, kind)), (m.label, kind)

    @pytest.mark.parametrize("preset", ["Q", "cyclo3"])
    def test_homotopy(self, preset):
        field_spec = field_preset(preset)
        m = induced_module(3, (1, 1, 1), trivial_rep((1, 1, 1), field_spec.q), field_spec)
        report = homotopy_check(m, "a")
        assert report.ok
        assert len(report.dims) == 4

    def test_inclusions(self, field_two):
        for m in all_modules(3, field_two):
            for mu in compositions(3):
                assert inclusion_check(m, (1, 1, 1), mu) == (True, True)

    def test_inclusion_needs_containment(self, field_two):
        m = induced_module(3, (3,), trivial_rep((3,), field_two.q), field_two)
        with pytest.raises(PreconditionError):
            inclusion_check(m, (3,), (1, 2))


class TestTensorPairs:
    """Пары модулей над H_n(q⁻¹) ⊗ H_n(q) и градуированное 0-Гекке действие"""

    @pytest.mark.parametrize("preset,q", [("Q", "2"), ("gauss", None)])
    def test_zero_hecke_relations(self, preset, q):
        field_spec = field_preset(preset, q)
        q = field_spec.q
        for lam in compositions(3):
            for mu in compositions(3):
                for chi in (trivial_rep(lam, q), alternating_rep(lam, q)):
                    zero_hecke_gr_action(lam, mu, chi, trivial_rep(mu, q.inverse()))

    def test_zero_hecke_decomposition(self, field_two):
        q = field_two.q
        for lam, mu in [((2, 1), (1, 2)), ((1, 1, 1), (3,)), ((2, 1), (2, 1))]:
            chi, chi_prime = trivial_rep(lam, q), alternating_rep(mu, q.inverse())
            assert zero_hecke_decomposition(lam, mu, chi, chi_prime).ok

    def test_zero_hecke_regular_with_trivial(self, field_two):
        q = field_two.q
        lam, mu = (1, 1, 1), (1, 2)
        report = zero_hecke_decomposition(lam, mu, trivial_rep(lam, q), trivial_rep(mu, q.inverse()))
        assert report.isomorphic
        assert report.ok

    @pytest.mark.slow
    @pytest.mark.parametrize("preset,q", [("Q", "2"), ("gauss", None)])
    def test_zero_hecke_decomposition_all_pairs(self, preset, q):
        field_spec = field_preset(preset, q)
        q = field_spec.q
        for lam in compositions(3):
            for mu in compositions(3):
                for chi in (trivial_rep(lam, q), alternating_rep(lam, q)):
                    for chi_prime in (trivial_rep(mu, q.inverse()), alternating_rep(mu, q.inverse())):
                        report = zero_hecke_decomposition(lam, mu, chi, chi_prime)
                        assert report.ok, (lam, mu, chi.letters(), chi_prime.letters())

    def test_zero_hecke_needs_nonzero_q(self, field_zero):
        chi = trivial_rep((2,), field_zero.q)
        with pytest.raises(PreconditionError):
            zero_hecke_gr_action((2,), (2,), chi, chi)

    @pytest.mark.parametrize("q", ["2", "-1"])
    def test_preimage(self, q):
        field_spec = field_preset("Q", q)
        for lam in compositions(3):
            for mu in compositions(3):
                assert preimage_check(lam, mu, field_spec).ok, (lam, mu)

    @pytest.mark.slow
    @pytest.mark.parametrize("q", ["2", "-1"])
    def test_preimage_in_rank_four(self, q):
        field_spec = field_preset("Q", q)
        for lam in compositions(4):
            for mu in compositions(4):
                assert preimage_check(lam, mu, field_spec).ok, (lam, mu)

    def test_tensor_exactness(self, field_two):
        q = field_two.q
        right = induced_module(3, (2, 1), trivial_rep((2, 1), q), field_two)
        left = induced_module(3, (1, 2), trivial_rep((1, 2), q.inverse()), field_two)
        for kind in ("image", "kernel"):
            assert not any(tensor_exactness(left, right, kind))
