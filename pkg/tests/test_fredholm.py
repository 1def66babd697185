"""Fredholm pairs: index, reduction, complexes, additivity and the perturbation statement."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from sympy import Matrix, eye, zeros

from dirac_pairings.errors import (
    DatumLoadError,
    DiagramNotCommutative,
    HypothesisSTnotZero,
    NotAComplex,
    SemisimplicityFails,
    SequenceNotExact,
    ShapeMismatch,
    UsageError,
)
from dirac_pairings.fredholm import (
    DEFAULT_INSTANCES,
    SUITES,
    ExtensionDiagram,
    FredholmPairData,
    GradedComplexData,
    SuperOperator,
    check_additivity,
    cohomology_dims,
    complex_to_pair,
    euler_via_pair,
    exact_matrix,
    extension_diagram,
    fredholm_index,
    intersection_dim,
    kernel,
    matrix_to_json,
    perturbation_pair,
    perturbed_index,
    quotient_map,
    random_complex,
    random_pair,
    random_st_zero_pair,
    rank_index,
    reduced_pair,
    run_suite,
    run_suites,
)
from dirac_pairings.lab import perturbation_exports

seeds = st.integers(min_value=0, max_value=10_000)


class TestExactMatrix:
    def test_rational_strings(self):
        m = exact_matrix([["1/2", 3], ["-2/4", "0"]])
        assert matrix_to_json(m) == [["1/2", "3"], ["-1/2", "0"]]

    def test_empty_with_width(self):
        assert exact_matrix([], cols=3).shape == (0, 3)

    def test_ragged(self):
        with pytest.raises(ShapeMismatch):
            exact_matrix([[1, 2], [3]])

    def test_bad_entry(self):
        with pytest.raises(DatumLoadError):
            exact_matrix([["one"]])

    def test_subspaces(self):
        m = Matrix([[1, 0, 0], [0, 1, 0]])
        assert kernel(m).shape == (3, 1)
        assert intersection_dim(eye(3)[:, :2], eye(3)[:, 1:]) == 1

    def test_quotient(self):
        projection, section = quotient_map(Matrix([[1], [1]]), 2)
        assert projection.shape == (1, 2)
        assert section.shape == (2, 1)
        assert projection * Matrix([[1], [1]]) == zeros(1, 1)
        assert projection * section == eye(1)


class TestIndex:
    def test_zero_maps(self):
        index = fredholm_index(FredholmPairData(zeros(3, 3), zeros(3, 3)))
        assert (index.a, index.b, index.index) == (3, 3, 0)

    @pytest.mark.parametrize("n", [1, 2, 4])
    def test_invertible_s(self, n):
        index = fredholm_index(FredholmPairData(eye(n), zeros(n, n)))
        assert (index.a, index.b) == (0, 0)

    def test_zero_t_is_operator_index(self):
        s = Matrix([[1, 2, 3], [2, 4, 6]])
        index = fredholm_index(FredholmPairData(s, zeros(3, 2)))
        assert index.a == 2
        assert index.b == 1
        assert index.index == 1

    def test_image_of_t_inside_kernel_of_s(self):
        pair = FredholmPairData(Matrix([[1, 0]]), Matrix([[0], [1]]))
        assert fredholm_index(pair).index == 0

    def test_shape_mismatch(self):
        with pytest.raises(ShapeMismatch):
            FredholmPairData(zeros(2, 3), zeros(2, 3))

    @settings(max_examples=40, deadline=None)
    @given(seed=seeds)
    def test_rank_formula(self, seed):
        p = random_pair(random.Random(seed))
        assert fredholm_index(p).index == rank_index(p)

    @settings(max_examples=25, deadline=None)
    @given(seed=seeds)
    def test_zero_t_matches_nullity_minus_corank(self, seed):
        s = random_pair(random.Random(seed)).s
        index = fredholm_index(FredholmPairData(s, zeros(s.cols, s.rows)))
        assert index.index == s.cols - s.rows


class TestReduction:
    def test_inverse_pair(self):
        s = Matrix([[2, 1], [1, 1]])
        reduced = reduced_pair(FredholmPairData(s, s.inv()))
        assert (reduced.pair.dim_x, reduced.pair.dim_y) == (0, 0)
        assert reduced.reduced.index == 0

    def test_zero_t_keeps_the_pair(self):
        s = Matrix([[1, 2], [0, 0], [3, 6]])
        reduced = reduced_pair(FredholmPairData(s, zeros(2, 3)))
        assert (reduced.pair.dim_x, reduced.pair.dim_y) == (2, 3)
        assert reduced.reduced == reduced.original

    @settings(max_examples=40, deadline=None)
    @given(seed=seeds)
    def test_index_is_preserved(self, seed):
        p = random_pair(random.Random(seed))
        reduced = reduced_pair(p)
        assert reduced.original.index == reduced.reduced.index
        assert reduced.reduced.index == reduced.pair.dim_x - reduced.pair.dim_y


class TestComplexes:
    def test_acyclic(self):
        c = GradedComplexData((1, 1), (eye(1),))
        assert cohomology_dims(c) == [0, 0]
        assert euler_via_pair(c) == 0

    def test_zero_differential(self):
        c = GradedComplexData((1, 1), (zeros(1, 1),))
        assert cohomology_dims(c) == [1, 1]
        assert euler_via_pair(c) == 0

    def test_not_a_complex(self):
        with pytest.raises(NotAComplex):
            GradedComplexData((1, 1, 1), (eye(1), eye(1)))

    def test_wrong_shapes(self):
        with pytest.raises(ShapeMismatch):
            GradedComplexData((2, 1), (zeros(2, 2),))

    def test_folding(self):
        c = GradedComplexData((1, 2, 1), (Matrix([[1], [0]]), Matrix([[0, 1]])))
        pair = complex_to_pair(c)
        assert (pair.dim_x, pair.dim_y) == (2, 2)
        assert cohomology_dims(c) == [0, 0, 0]
        assert fredholm_index(pair).index == 0

    @settings(max_examples=40, deadline=None)
    @given(seed=seeds)
    def test_random_complexes(self, seed):
        c = random_complex(random.Random(seed), length=4, max_dim=8)
        alternating = sum((-1) ** i * n for i, n in enumerate(c.dims))
        assert euler_via_pair(c) == alternating


class TestAdditivity:
    def test_direct_sum(self):
        report = check_additivity(extension_diagram(random.Random(3), split=True))
        assert report.holds

    @settings(max_examples=30, deadline=None)
    @given(seed=seeds)
    def test_constructed_extensions(self, seed):
        assert check_additivity(extension_diagram(random.Random(seed))).holds

    def _simple(self) -> ExtensionDiagram:
        one = FredholmPairData(zeros(1, 1), zeros(1, 1))
        two = FredholmPairData(zeros(2, 2), zeros(2, 2))
        inclusion = Matrix([[1], [0]])
        projection = Matrix([[0, 1]])
        return ExtensionDiagram((one, two, one), inclusion, projection, inclusion, projection)

    def test_simple_diagram(self):
        report = check_additivity(self._simple())
        assert report.indices == (0, 0, 0)

    def test_not_exact(self):
        d = self._simple()
        broken = ExtensionDiagram(d.pairs, d.alpha, zeros(1, 2), d.gamma, d.delta)
        with pytest.raises(SequenceNotExact):
            check_additivity(broken)

    def test_not_commutative(self):
        d = self._simple()
        middle = FredholmPairData(Matrix([[0, 0], [1, 0]]), zeros(2, 2))
        with pytest.raises(DiagramNotCommutative):
            check_additivity(ExtensionDiagram((d.pairs[0], middle, d.pairs[2]), d.alpha, d.beta, d.gamma, d.delta))

    def test_st_nonzero(self):
        d = self._simple()
        middle = FredholmPairData(eye(2), eye(2))
        with pytest.raises(HypothesisSTnotZero):
            check_additivity(ExtensionDiagram((d.pairs[0], middle, d.pairs[2]), d.alpha, d.beta, d.gamma, d.delta))


class TestPerturbation:
    def _odd(self, plus, minus):
        p, q = plus.cols, plus.rows
        m = zeros(p + q, p + q)
        m[p:, :p] = plus
        m[:p, p:] = minus
        return SuperOperator(p, q, m)

    def test_zero_perturbation(self):
        d = self._odd(Matrix([[1, 0]]), zeros(2, 1))
        report = perturbed_index(d, self._odd(zeros(1, 2), zeros(2, 1)))
        assert report.holds
        assert report.index_d == 1

    def test_zero_differential(self):
        partial = self._odd(Matrix([[1, 0], [0, 0]]), Matrix([[0, 0], [0, 1]]))
        report = perturbed_index(self._odd(zeros(2, 2), zeros(2, 2)), partial)
        assert report.index_d == 0
        assert report.index_f == 0
        assert report.holds

    def test_even_operator_refused(self):
        with pytest.raises(ShapeMismatch):
            SuperOperator(1, 1, eye(2))

    def test_d_squared(self):
        d = self._odd(Matrix([[1]]), Matrix([[1]]))
        with pytest.raises(NotAComplex):
            perturbed_index(d, self._odd(zeros(1, 1), zeros(1, 1)))

    def test_semisimplicity(self):
        # F = d + ∂ with F² nilpotent and nonzero on a 2|2 space
        d = self._odd(Matrix([[1, 0], [0, 0]]), zeros(2, 2))
        partial = self._odd(zeros(2, 2), Matrix([[0, 0], [1, 0]]))
        with pytest.raises(SemisimplicityFails):
            perturbed_index(d, partial)

    @settings(max_examples=30, deadline=None)
    @given(seed=seeds)
    def test_random_instances(self, seed):
        d, partial = perturbation_pair(random.Random(seed))
        try:
            report = perturbed_index(d, partial)
        except SemisimplicityFails:
            return
        assert report.holds
        assert report.kernel_index == report.index_f


class TestSuites:
    @pytest.mark.parametrize("name", SUITES)
    def test_each_suite(self, name):
        result = run_suite(name, seed=7, instances=8)
        assert result.ok, result.failures
        assert result.passed + result.skipped == 8

    def test_reproducible(self):
        first = run_suite("perturbation", seed=11, instances=10).to_json()
        second = run_suite("perturbation", seed=11, instances=10).to_json()
        assert first == second

    def test_all(self):
        results = run_suites("all", seed=0, instances=3)
        assert [r.name for r in results] == ["definition", "euler", "reduction", "additivity", "perturbation"]

    def test_default_counts(self):
        assert DEFAULT_INSTANCES == {
            "definition": 100,
            "euler": 200,
            "reduction": 100,
            "additivity": 100,
            "perturbation": 50,
        }

    def test_euler_reaches_dimension_eight(self):
        rng = random.Random("euler:3")
        complexes = [random_complex(rng, length=5, max_dim=8) for _ in range(20)]
        assert max(max(c.dims) for c in complexes) == 8
        for c in complexes:
            assert euler_via_pair(c) == sum((-1) ** i * n for i, n in enumerate(c.dims))

    def test_exports_run_before_random_instances(self):
        d, partial = perturbation_pair(random.Random(2))
        result = run_suite("perturbation", seed=0, instances=4, exports=[("given", d, partial)])
        assert (result.instances, result.exported) == (4, 1)
        assert result.passed + result.skipped == 4
        assert result.to_json()["exported"] == 1

    def test_exports_ignored_by_other_suites(self):
        d, partial = perturbation_pair(random.Random(2))
        result = run_suite("reduction", seed=0, instances=4, exports=[("given", d, partial)])
        assert result.exported == 0

    def test_non_positive_instances(self):
        with pytest.raises(UsageError):
            run_suite("definition", seed=0, instances=0)

    def test_unknown(self):
        with pytest.raises(UsageError):
            run_suite("nope", seed=0)

    def test_st_zero_generator(self):
        p = random_st_zero_pair(random.Random(5), max_dim=5)
        assert p.s * p.t == zeros(p.dim_y, p.dim_y)
        assert p.t * p.s == zeros(p.dim_x, p.dim_x)


@pytest.mark.slow
@pytest.mark.parametrize("seed", [0, 7])
def test_all_suites_at_default_counts(seed):
    results = run_suites("all", seed, exports=perturbation_exports(3))
    assert [r.name for r in results] == list(SUITES)
    for r in results:
        assert r.ok, r.failures
        assert r.seed == seed
        assert r.instances == DEFAULT_INSTANCES[r.name]
        assert r.passed + r.skipped == r.instances
        assert r.exported == (16 if r.name == "perturbation" else 0)
