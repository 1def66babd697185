"""Matrix lab on sl(2, R): spinors, Dirac operators, (S, T), Ext and the splitting."""

import json

import pytest
from sympy import Matrix, Rational, diag, zeros

from dirac_pairings.errors import DatumLoadError, IdentityFailed, UsageError
from dirac_pairings.fredholm import euler_via_pair, perturbed_index, run_suite
from dirac_pairings.lab import ext as ext_module
from dirac_pairings.lab import split as splitting
from dirac_pairings.lab import suite as lab_suite
from dirac_pairings.lab import (
    build_spinor_matrices,
    conjecture_check,
    dirac_cohomology,
    dirac_matrix,
    ext_complex,
    finite_dimensional_module,
    highest_weight,
    hom_space,
    index_ST,
    lab_algebra,
    load_matrix_module,
    module_from_dict,
    modules_up_to,
    perturbation_exports,
    perturbation_instance,
    run_conjecture,
    run_identities,
    run_lab,
    sl2_algebra,
    split_operators,
    verify_parthasarathy,
    verify_scalar_action,
)
from dirac_pairings.spin import dirac_index_finite_dim, ep_pairing_finite_dim
from dirac_pairings.weights import Weight


@pytest.fixture(scope="module")
def algebra():
    return sl2_algebra()


@pytest.fixture(scope="module")
def spinors(algebra):
    return build_spinor_matrices(algebra)


@pytest.fixture(scope="module")
def f(algebra):
    return {n: finite_dimensional_module(n, algebra) for n in range(5)}


F1_HALF = {
    "name": "F1-rescaled",
    "dimension": 2,
    "weights": [[1], [-1]],
    "actions": {
        "h": [[1, 0], [0, -1]],
        "e": [[0, "1/2"], [0, 0]],
        "f": [[0, 0], [2, 0]],
    },
    "infinitesimal_character": [2],
}


class TestSpinors:
    def test_matrices(self, spinors):
        assert spinors.gamma_u[0] == Matrix([[0, 0], [1, 0]])
        assert spinors.gamma_u_star[0] == Matrix([[0, -2], [0, 0]])
        assert spinors.weights == ((-1,), (1,))
        assert spinors.grading == diag(1, -1)

    def test_spin_map(self, algebra, spinors):
        assert spinors.spin_map(algebra.unit(0)) == diag(-1, 1)

    def test_clifford_relation_on_a_mixed_vector(self, algebra, spinors):
        e, f = algebra.p_basis
        v = e + 3 * f
        assert spinors.gamma(v) ** 2 == -algebra.b(v, v) * Matrix.eye(2)

    def test_only_sl2(self):
        with pytest.raises(UsageError):
            lab_algebra("su21")


class TestModules:
    def test_finite_dimensional(self, f):
        assert f[3].dim == 4
        assert f[3].weights == ((3,), (1,), (-1,), (-3,))
        assert f[2].casimir == Rational(4) * Matrix.eye(3)

    def test_rational_entries(self):
        module = module_from_dict(F1_HALF)
        assert module.actions["e"][0, 1] == Rational(1, 2)

    def test_load(self, tmp_path):
        path = tmp_path / "half.json"
        path.write_text(json.dumps(F1_HALF))
        assert load_matrix_module(path).dim == 2

    def test_broken_bracket(self):
        broken = dict(F1_HALF, actions=dict(F1_HALF["actions"], f=[[0, 0], [3, 0]]))
        with pytest.raises(IdentityFailed):
            module_from_dict(broken)

    def test_wrong_infinitesimal_character(self):
        with pytest.raises(IdentityFailed):
            module_from_dict(dict(F1_HALF, infinitesimal_character=[4]))

    def test_missing_file(self, tmp_path):
        with pytest.raises(DatumLoadError):
            load_matrix_module(tmp_path / "absent.json")

    def test_malformed(self, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text(json.dumps({"weights": [[0]]}))
        with pytest.raises(DatumLoadError):
            load_matrix_module(path)


class TestDirac:
    def test_matrix_on_f1(self, f, spinors):
        d = dirac_matrix(f[1], spinors)
        assert d == Matrix([[0, 0, 0, -2], [0, 0, 0, 0], [0, 0, 0, 0], [1, 0, 0, 0]])

    @pytest.mark.parametrize("n", [0, 1, 2, 4])
    def test_square(self, f, spinors, n):
        square = verify_parthasarathy(f[n], spinors)
        # D²(v_k ⊗ 1) = -2(k + 1)(n - k) v_k ⊗ 1
        for k in range(n + 1):
            assert square[2 * k, 2 * k] == -2 * (k + 1) * (n - k)

    def test_scalar_action(self, f, spinors):
        assert verify_scalar_action(f[1], spinors) == {(0,): -2, (2,): 0, (-2,): 0}

    def test_basis_independence(self, algebra, f, spinors):
        e, fv = algebra.p_basis
        assert dirac_matrix(f[3], spinors, [e + fv, e - fv]) == dirac_matrix(f[3], spinors)

    def test_rescaled_form(self, f, spinors):
        scaled = sl2_algebra().scaled(4)
        module = finite_dimensional_module(2, scaled)
        square = verify_parthasarathy(module, build_spinor_matrices(scaled))
        assert square == verify_parthasarathy(f[2], spinors) / 4

    def test_cohomology(self, f, spinors):
        h1 = dirac_cohomology(f[1], spinors)
        assert (h1.plus, h1.minus) == ({(-2,): 1}, {(2,): 1})
        h0 = dirac_cohomology(f[0], spinors)
        assert (h0.plus, h0.minus) == ({(-1,): 1}, {(1,): 1})

    @pytest.mark.parametrize("n", range(5))
    def test_index_matches_weights(self, f, spinors, sl2r, n):
        assert dirac_cohomology(f[n], spinors).index == dirac_index_finite_dim(sl2r, Weight.of(n))


class TestST:
    def test_hom_space(self, f, spinors):
        space = hom_space(f[1], f[1], spinors)
        assert space.dims_by_degree() == [2, 2, 2]
        assert (len(space.even), len(space.odd)) == (4, 2)

    @pytest.mark.parametrize("n", range(4))
    def test_diagonal(self, f, spinors, n):
        report = index_ST(f[n], f[n], spinors)
        assert report.holds, report.checks
        assert report.index.index == 2
        assert report.dirac_pairing == 2

    @pytest.mark.parametrize(("n", "m"), [(0, 2), (1, 3), (2, 0), (0, 1)])
    def test_off_diagonal(self, f, spinors, n, m):
        report = index_ST(f[n], f[m], spinors)
        assert report.holds, report.checks
        assert report.index.index == 0

    def test_quotients_match_cohomology(self, f, spinors):
        report = index_ST(f[1], f[1], spinors)
        assert (report.index.a, report.index.b) == (2, 0)
        assert report.hom_dims == (4, 2)


class TestExt:
    def test_f1(self, f, spinors):
        ext = ext_complex(f[1], f[1], spinors)
        assert ext.dims == [2, 2, 2]
        assert ext.cohomology == [1, 0, 1]

    def test_trivial(self, f, spinors):
        ext = ext_complex(f[0], f[0], spinors)
        assert ext.dims == [1, 0, 1]
        assert ext.cohomology == [1, 0, 1]

    def test_f1_f3(self, f, spinors):
        ext = ext_complex(f[1], f[3], spinors)
        assert ext.dims == [2, 4, 2]
        assert ext.euler == 0

    @pytest.mark.parametrize(("n", "m"), [(0, 0), (1, 1), (2, 2), (1, 3), (0, 2), (3, 3)])
    def test_euler_is_ep(self, f, spinors, sl2r, n, m):
        ext = ext_complex(f[n], f[m], spinors)
        assert ext.euler == ep_pairing_finite_dim(sl2r, Weight.of(n), Weight.of(m))

    @pytest.mark.parametrize(("n", "m"), [(1, 1), (2, 4), (3, 3)])
    def test_euler_agrees_with_dims_and_cohomology(self, f, spinors, n, m):
        ext = ext_complex(f[n], f[m], spinors)
        assert ext.euler == sum((-1) ** i * c for i, c in enumerate(ext.dims))
        assert ext.euler == sum((-1) ** i * h for i, h in enumerate(ext.cohomology))

    def test_euler_goes_through_the_folded_pair(self, f, spinors, monkeypatch):
        seen = []

        def recording(c):
            seen.append(c.dims)
            return euler_via_pair(c)

        monkeypatch.setattr(ext_module, "euler_via_pair", recording)
        ext = ext_complex(f[2], f[2], spinors)
        assert seen == [tuple(ext.dims)]
        assert ext.euler == 2


class TestSplit:
    @pytest.mark.parametrize(("n", "m"), [(0, 0), (1, 1), (2, 2), (1, 3), (2, 0)])
    def test_identities(self, f, spinors, n, m):
        split = split_operators(f[n], f[m], spinors)
        assert split.holds, split.checks
        assert len(split.checks) == 6

    def test_failed_identity_raises_with_entry(self, f, spinors, monkeypatch):
        original = splitting.eight_operators

        def doubled_d(space):
            ops = dict(original(space))
            for name in ("A1", "A3", "B2", "B4"):
                op = ops[name]
                ops[name] = lambda phi, op=op: {key: 2 * m for key, m in op(phi).items()}
            return ops

        monkeypatch.setattr(splitting, "eight_operators", doubled_d)
        with pytest.raises(IdentityFailed, match="Ext differential") as failure:
            split_operators(f[1], f[1], spinors)
        assert failure.value.detail.startswith("entry (")

    def test_failed_identity_is_a_lab_failure(self, monkeypatch):
        def broken(x, y, spinors):
            raise IdentityFailed("d² = 0", "entry (0, 0): 1 vs 0")

        monkeypatch.setattr(lab_suite, "split_operators", broken)
        result = run_identities("sl2R", 0)
        assert not result.ok
        assert any("d² = 0" in failure for failure in result.failures)

    def test_d_and_delta_change_degree(self, f, spinors):
        split = split_operators(f[1], f[1], spinors)
        space = split.space
        degree = [u.degree for u in space.units]
        for col in range(space.dim):
            for row in range(space.dim):
                if split.d[row, col] != 0:
                    assert degree[row] == degree[col] + 1
                if split.delta[row, col] != 0:
                    assert degree[row] == degree[col] - 1

    def test_perturbation_f2_f2(self, f, spinors):
        report = perturbed_index(*perturbation_instance(f[2], f[2], spinors))
        assert report.holds
        assert report.index_d == report.index_f == 2

    def test_exports_feed_the_perturbation_suite(self):
        exports = perturbation_exports(1)
        assert [label for label, _, _ in exports] == ["F0, F0", "F0, F1", "F1, F0", "F1, F1"]
        result = run_suite("perturbation", seed=0, instances=6, exports=exports)
        assert result.ok, result.failures
        assert (result.instances, result.exported) == (6, 4)
        assert result.passed + result.skipped == 6
        assert result.passed >= 4

    def test_trivial_perturbation(self, f, spinors):
        d, partial = perturbation_instance(f[0], f[0], spinors)
        assert d.matrix == zeros(2, 2)
        assert partial.matrix == zeros(2, 2)
        report = perturbed_index(d, partial)
        assert (report.index_d, report.index_f) == (2, 2)

    @pytest.mark.parametrize(("n", "m"), [(0, 0), (1, 1), (2, 2), (1, 3), (3, 1)])
    def test_indices_agree(self, f, spinors, n, m):
        report = conjecture_check(f[n], f[m], spinors)
        assert report.holds, report.to_json()
        expected = 2 if n == m else 0
        assert report.index_d == report.index_script_d == report.euler_poincare == expected
        assert report.euler_poincare_weights == expected
        assert report.to_json()["EP_weights"] == expected

    def test_highest_weight(self, f):
        assert [highest_weight(f[n]) for n in range(3)] == [Weight.of(0), Weight.of(1), Weight.of(2)]
        assert highest_weight(module_from_dict(F1_HALF)) == Weight.of(1)


class TestRuns:
    def test_identities(self):
        result = run_identities("sl2R", 2)
        assert result.ok, result.failures
        assert len(result.rows) == 3 + 9

    def test_conjecture(self):
        result = run_conjecture("sl2R", 2)
        assert result.ok, result.failures
        assert all(row["holds"] for row in result.rows)

    def test_loaded_module(self):
        result = run_identities(n_max=0, extra=[module_from_dict(F1_HALF)])
        assert result.ok, result.failures
        assert len(result.rows) == 2 + 4
        assert result.rows[1]["module"] == "F1-rescaled"

    def test_threads_keep_order(self):
        serial = run_conjecture("sl2R", 1, threads=1)
        parallel = run_conjecture("sl2R", 1, threads=4)
        assert serial.to_json() == parallel.to_json()

    def test_unknown_run(self):
        with pytest.raises(UsageError):
            run_lab("nope")


@pytest.mark.slow
def test_indices_agree_up_to_f6(algebra, spinors):
    modules = modules_up_to(6, algebra)
    for x in modules:
        for y in modules:
            report = conjecture_check(x, y, spinors)
            assert report.holds, report.to_json()
            expected = 2 if x.name == y.name else 0
            assert report.euler_poincare_weights == report.index_d == expected
