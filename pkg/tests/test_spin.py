"""Spinor modules, parameters, Dirac indices and the Dirac / Euler-Poincare pairings."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dirac_pairings.errors import InvalidParameter, SingularOnCompactWall, UnboundedProvider
from dirac_pairings.spin import (
    DiracIndex,
    HCParameter,
    KTypeProvider,
    ParameterKind,
    dirac_candidates,
    dirac_index_admissible,
    dirac_index_combination,
    dirac_index_finite_dim,
    dirac_index_limits,
    dirac_pairing,
    dirac_pairing_summands,
    ds_family,
    empty_provider,
    ep_pairing_degrees,
    ep_pairing_finite_dim,
    finite_dimensional_provider,
    holomorphic_ladder_provider,
    index_coefficients,
    limit_combination,
    normalize_parameter,
    spinor_modules,
    spinor_weights,
    wedge_p_alternating,
)
from dirac_pairings.weights import (
    Cover,
    LaurentElement,
    VirtualCharacter,
    Weight,
    build_root_datum,
    dimension,
    expand,
    pair,
    weyl_group,
)

SPIN = Cover.SPIN
LIMIT = ParameterKind.LIMIT


def w(*coords, cover=Cover.K):
    return Weight.of(*coords, cover=cover)


def spin_char(terms):
    return VirtualCharacter.from_terms({w(*k, cover=SPIN): c for k, c in terms.items()}, SPIN)


class TestSpinors:
    def test_sl2r(self, sl2r_spinors):
        assert sl2r_spinors.s_plus == spin_char({(-1,): 1})
        assert sl2r_spinors.s_minus == spin_char({(1,): 1})

    @pytest.mark.parametrize(("name", "half_dim"), [("sl2R", 1), ("su21", 2), ("sp4R", 4)])
    def test_dimensions(self, name, half_dim):
        datum = build_root_datum(name)
        spinors = spinor_modules(datum)
        assert dimension(datum, spinors.s_plus) == half_dim
        assert dimension(datum, spinors.s_minus) == half_dim

    def test_su21_decomposition(self, su21):
        spinors = spinor_modules(su21)
        assert spinors.s_plus == spin_char({(0, -3): 1, (0, 3): 1})
        assert spinors.s_minus == spin_char({(2, -1): 1})

    def test_half_spin_modules_share_nothing(self, preset):
        spinors = spinor_modules(preset)
        assert pair(spinors.s_plus, spinors.s_minus) == 0
        assert spinors.s_plus != spinors.s_minus

    def test_extreme_weights(self, preset):
        spinors = spinor_modules(preset)
        rho_n = preset.rho_n
        assert expand(preset, spinors.s_plus).coefficient(-rho_n) == 1
        # +rho_n is the full subset sum, so its parity is that of dim p / 2
        top = spinors.s_minus if (preset.dim_p // 2) % 2 else spinors.s_plus
        assert expand(preset, top).coefficient(rho_n) == 1

    def test_plain_subset_parity(self, sl2r):
        even, odd = spinor_weights(sl2r)
        assert even == LaurentElement.monomial(-sl2r.rho_n)
        assert odd == LaurentElement.monomial(sl2r.rho_n)

    def test_wedge_p_sl2r(self, sl2r):
        assert wedge_p_alternating(sl2r) == VirtualCharacter.from_terms(
            {w(-2): -1, w(0): 2, w(2): -1}
        )

    def test_wedge_p_identity_on_presets(self, preset):
        alternating = wedge_p_alternating(preset)
        assert alternating.cover is Cover.K
        assert dimension(preset, alternating) == 0


class TestParameters:
    def test_sl2r_family(self, sl2r):
        family = ds_family(sl2r, 3)
        assert [(p.chi.coords, p.chamber, p.kind) for p in family] == [
            ((3,), 0, ParameterKind.DISCRETE_SERIES),
            ((-3,), 1, ParameterKind.DISCRETE_SERIES),
        ]

    def test_sl2r_zero_gives_limits(self, sl2r):
        assert [p.kind for p in ds_family(sl2r, 0)] == [LIMIT, LIMIT]

    def test_su21_family_has_three_members(self, su21):
        family = ds_family(su21, 1)
        assert len(family) == 3
        assert len({p.chamber for p in family}) == 3

    def test_negative_pairing_rejected(self, sl2r):
        with pytest.raises(InvalidParameter):
            dirac_index_limits(sl2r, HCParameter(w(-1, cover=SPIN), 0))

    def test_singular_discrete_series_rejected(self, sl2r):
        with pytest.raises(InvalidParameter):
            dirac_index_limits(sl2r, HCParameter(w(0, cover=SPIN), 0))

    def test_compact_wall_rejected(self, su21):
        with pytest.raises(SingularOnCompactWall):
            dirac_index_limits(su21, HCParameter(w(0, 2, cover=SPIN), 0, LIMIT))

    def test_normalisation_fixes_compact_chamber(self, su21):
        reference = su21.compact_positive_system(0)
        for chamber in range(su21.chamber_count):
            element = su21.chamber_elements[chamber]
            chi = element.apply(su21.rho)
            normal = normalize_parameter(su21, HCParameter(chi, chamber))
            assert su21.compact_positive_system(normal.chamber) == reference
            assert su21.norm2(normal.chi) == su21.norm2(chi)

    def test_limit_combination_sl2r(self, sl2r):
        combination = limit_combination(sl2r, w(0, cover=SPIN), 0)
        assert combination.weight == Fraction(1, 2)
        assert [(m.chamber, sign) for m, sign in combination.members] == [(0, 1), (1, -1)]
        assert dirac_index_combination(sl2r, combination).index == spin_char({(0,): 1})


class TestDiracIndex:
    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
    def test_sl2r_discrete_series(self, sl2r, n):
        holomorphic = dirac_index_limits(sl2r, HCParameter(w(n, cover=SPIN), 0))
        antiholomorphic = dirac_index_limits(sl2r, HCParameter(w(-n, cover=SPIN), 1))
        assert holomorphic.index == spin_char({(n,): 1})
        assert antiholomorphic.index == spin_char({(-n,): -1})

    def test_index_is_invariant_under_compact_conjugation(self, su21):
        for chamber in range(su21.chamber_count):
            chi = su21.chamber_elements[chamber].apply(su21.rho.scaled(2))
            p = HCParameter(chi, chamber)
            assert dirac_index_limits(su21, p) == dirac_index_limits(su21, normalize_parameter(su21, p))

    def test_su21_family_has_distinct_k_types(self, su21):
        indices = [dirac_index_limits(su21, p) for p in ds_family(su21, 1)]
        heads = {next(iter(i.index))[0] for i in indices}
        assert len(heads) == 3
        assert all(len(i.index) == 1 for i in indices)

    def test_sl2r_trivial_module(self, sl2r):
        assert dirac_index_finite_dim(sl2r, w(0)).index == spin_char({(-1,): 1, (1,): -1})

    @pytest.mark.parametrize("n", range(7))
    def test_sl2r_finite_dimensional(self, sl2r, n):
        index = dirac_index_finite_dim(sl2r, w(n)).index
        assert index == spin_char({(-n - 1,): 1, (n + 1,): -1})
        assert sum(c for _, c in index) == 0

    @pytest.mark.parametrize("n", [1, 2, 5])
    def test_sl2r_candidates(self, sl2r, n):
        assert dirac_candidates(sl2r, w(n, cover=SPIN)) == [w(-n, cover=SPIN), w(n, cover=SPIN)]

    def test_candidates_are_orbit_invariant(self, su21):
        base = w(4, 2, cover=SPIN)
        expected = dirac_candidates(su21, base)
        for element in weyl_group(su21):
            assert dirac_candidates(su21, element.apply(base)) == expected

    @pytest.mark.parametrize("coords", [(2, 2), (4, 2), (6, 4), (2, 8)])
    def test_norm_filter_is_a_superset(self, su21, coords):
        infinitesimal = w(*coords, cover=SPIN)
        exact = set(dirac_candidates(su21, infinitesimal))
        relaxed = set(dirac_candidates(su21, infinitesimal, norm_filter=True))
        assert exact <= relaxed

    @pytest.mark.parametrize("hw", [(0, 0), (2, 0), (0, 2), (2, 2), (4, 0)])
    def test_index_support_lies_in_candidates(self, su21, hw):
        index = dirac_index_finite_dim(su21, w(*hw))
        candidates = set(dirac_candidates(su21, (w(*hw) + su21.rho).on(SPIN)))
        assert {g for g, _ in index.index} <= candidates

    @pytest.mark.parametrize("n", range(5))
    def test_admissible_matches_finite_dimensional_sl2r(self, sl2r, n):
        provider = finite_dimensional_provider(sl2r, w(n))
        admissible = dirac_index_admissible(sl2r, provider, w(n + 1, cover=SPIN))
        assert admissible == dirac_index_finite_dim(sl2r, w(n))

    @pytest.mark.parametrize("hw", [(0, 0), (2, 0), (2, 2)])
    def test_admissible_matches_finite_dimensional_su21(self, su21, hw):
        provider = finite_dimensional_provider(su21, w(*hw))
        infinitesimal = (w(*hw) + su21.rho).on(SPIN)
        admissible = dirac_index_admissible(su21, provider, infinitesimal)
        assert admissible == dirac_index_finite_dim(su21, w(*hw))

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_ladder_matches_closed_formula(self, sl2r, n):
        for chamber, chi in ((0, w(n, cover=SPIN)), (1, w(-n, cover=SPIN))):
            provider = holomorphic_ladder_provider(sl2r, chi, chamber)
            admissible = dirac_index_admissible(sl2r, provider, chi)
            assert admissible == dirac_index_limits(sl2r, HCParameter(chi, chamber))

    def test_ladder_needs_rank_one(self, su21):
        with pytest.raises(InvalidParameter):
            holomorphic_ladder_provider(su21, su21.rho)

    def test_empty_provider(self, sl2r):
        index = dirac_index_admissible(sl2r, empty_provider(), w(3, cover=SPIN))
        assert index == DiracIndex.zero()

    def test_unbounded_provider(self, sl2r):
        provider = KTypeProvider(lambda _: 1, None)
        with pytest.raises(UnboundedProvider):
            dirac_index_admissible(sl2r, provider, w(3, cover=SPIN))


class TestPairings:
    @pytest.mark.parametrize(("n", "m"), [(0, 0), (1, 1), (3, 3), (0, 2), (1, 3), (2, 5)])
    def test_sl2r_finite_dimensional_dirac(self, sl2r, n, m):
        a = dirac_index_finite_dim(sl2r, w(n))
        b = dirac_index_finite_dim(sl2r, w(m))
        assert dirac_pairing(a, b) == (2 if n == m else 0)

    def test_sl2r_discrete_series(self, sl2r):
        plus = dirac_index_limits(sl2r, HCParameter(w(2, cover=SPIN), 0))
        minus = dirac_index_limits(sl2r, HCParameter(w(-2, cover=SPIN), 1))
        assert dirac_pairing(plus, plus) == 1
        assert dirac_pairing(plus, minus) == 0

    def test_sl2r_limits_at_zero(self, sl2r):
        a = dirac_index_limits(sl2r, HCParameter(w(0, cover=SPIN), 0, LIMIT))
        b = dirac_index_limits(sl2r, HCParameter(w(0, cover=SPIN), 1, LIMIT))
        assert dirac_pairing(a, b) == -1

    def test_su21_family_gram_is_identity(self, su21):
        indices = [dirac_index_limits(su21, p) for p in ds_family(su21, 1)]
        gram = [[dirac_pairing(a, b) for b in indices] for a in indices]
        assert gram == [[1, 0, 0], [0, 1, 0], [0, 0, 1]]

    def test_summands(self, sl2r):
        a = dirac_index_finite_dim(sl2r, w(1))
        b = dirac_index_limits(sl2r, HCParameter(w(2, cover=SPIN), 0))
        assert dirac_pairing_summands(a, b) == [
            (w(-2, cover=SPIN), 1, 0),
            (w(2, cover=SPIN), -1, 1),
        ]
        assert index_coefficients(b) == [(w(2, cover=SPIN), 1)]
        assert dirac_pairing(a, b) == -1

    def test_ep_trivial(self, sl2r):
        assert ep_pairing_degrees(sl2r, w(0), w(0)) == [1, 0, 1]
        assert ep_pairing_finite_dim(sl2r, w(0), w(0)) == 2

    @pytest.mark.parametrize("n", range(5))
    def test_ep_diagonal(self, sl2r, n):
        assert ep_pairing_degrees(sl2r, w(n), w(n)) == [n + 1, 2 * n, n + 1]
        assert ep_pairing_finite_dim(sl2r, w(n), w(n)) == 2

    @pytest.mark.parametrize(("n", "m"), [(0, 2), (1, 3), (2, 4), (1, 2)])
    def test_ep_off_diagonal(self, sl2r, n, m):
        assert ep_pairing_finite_dim(sl2r, w(n), w(m)) == 0


@settings(max_examples=15, deadline=None)
@given(
    x=st.sampled_from([(0, 0), (2, 0), (0, 2), (2, 2), (4, 0)]),
    y=st.sampled_from([(0, 0), (2, 0), (0, 2), (2, 2), (0, 4)]),
)
def test_ep_equals_dirac_pairing_su21(x, y):
    datum = build_root_datum("su21")
    ep = ep_pairing_finite_dim(datum, w(*x), w(*y))
    dirac = dirac_pairing(dirac_index_finite_dim(datum, w(*x)), dirac_index_finite_dim(datum, w(*y)))
    assert ep == dirac


@settings(max_examples=20, deadline=None)
@given(n=st.integers(0, 6), m=st.integers(0, 6))
def test_ep_equals_dirac_pairing_sl2r(n, m):
    datum = build_root_datum("sl2R")
    ep = ep_pairing_finite_dim(datum, w(n), w(m))
    dirac = dirac_pairing(dirac_index_finite_dim(datum, w(n)), dirac_index_finite_dim(datum, w(m)))
    assert ep == dirac == (2 if n == m else 0)
