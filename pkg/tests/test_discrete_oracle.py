"""Tests for the finite-environment oracle and its cross-check battery."""

import json
import math
from itertools import combinations_with_replacement

import numpy as np
import pytest

from photon_darwinism.discrete_oracle import (
    DEFAULT_CAP,
    DirectionalGrid,
    DiscreteEnv,
    OracleCapError,
    analytic_entropy_change,
    discrete_alpha,
    discrete_gamma,
    fragment_eigenvalues,
    fragment_entropy_change_exact,
    fragment_entropy_change_series,
    fragment_entropy_exact,
    matrix_element_diag,
    mi_exact_general,
    oracle_battery,
    planck_spectral_nodes,
    scattering_probability_grid,
)
from photon_darwinism.entropy_kernels import LN2, h
from photon_darwinism.information import mutual_information
from photon_darwinism.radiometry import ZETA_3, ZETA_9, Scenario
from photon_darwinism.sky import SkyRegion
from photon_darwinism.superpositions import CatSpec, mi_mway


class TestFragmentSpectrum:
    def test_single_photon_pairs(self):
        b = [-0.1, 0.04]
        vals, mults = fragment_eigenvalues(b, 1)
        assert mults.sum() == 4
        assert np.sum(vals * mults) == pytest.approx(1.0, abs=1e-14)
        expected = sorted(
            (1.0 + s * math.sqrt(1.0 + bj)) / 4.0
            for bj in b for s in (+1.0, -1.0)
        )
        assert sorted(vals) == pytest.approx(expected, abs=1e-15)

    def test_unperturbed_environment_learns_nothing(self):
        vals, mults = fragment_eigenvalues([0.0] * 3, 2)
        assert np.sum(vals * mults) == pytest.approx(1.0, abs=1e-14)
        # half the branch pairs collapse to 1/D^fN, the other half to zero
        nonzero = vals[vals > 0.0]
        assert np.allclose(nonzero, 1.0 / 9.0)
        assert fragment_entropy_change_exact([0.0] * 3, 2) == pytest.approx(
            0.0, abs=1e-12
        )

    def test_group_count_matches_multiset_combinatorics(self):
        D, fN = 4, 3
        vals, mults = fragment_eigenvalues([-0.01 * j for j in range(D)], fN)
        n_multisets = len(list(combinations_with_replacement(range(D), fN)))
        assert vals.size == 2 * n_multisets
        assert mults.sum() == 2 * D**fN

    def test_cap_guards_the_enumeration(self):
        with pytest.raises(OracleCapError):
            fragment_eigenvalues([0.0] * 10, 8)
        with pytest.raises(OracleCapError):
            fragment_eigenvalues([0.0] * 4, 4, cap=100)
        assert DEFAULT_CAP == 10_000_000

    def test_input_validation(self):
        with pytest.raises(ValueError):
            fragment_eigenvalues([-1.5], 1)  # 1 + b must stay nonnegative
        with pytest.raises(ValueError):
            fragment_eigenvalues([0.0], 0)


class TestFragmentEntropy:
    def test_uniform_spectrum(self):
        d = 7
        assert fragment_entropy_exact(np.full(d, 1.0 / d)) == pytest.approx(
            math.log(d), rel=1e-13
        )

    def test_pure_state(self):
        assert fragment_entropy_exact(np.array([1.0, 0.0, 0.0])) == 0.0

    def test_multiplicities_expand_correctly(self):
        vals = np.array([0.2, 0.1])
        mults = np.array([3, 4])
        expanded = np.repeat(vals, mults)
        assert fragment_entropy_exact(vals, mults) == pytest.approx(
            fragment_entropy_exact(expanded), rel=1e-14
        )

    def test_rejects_bad_spectra(self):
        with pytest.raises(ValueError):
            fragment_entropy_exact(np.array([0.7, 0.6]))
        with pytest.raises(ValueError):
            fragment_entropy_exact(np.array([1.1, -0.1]))


class TestEntropyChange:
    def test_series_matches_enumeration(self):
        for b, fN in (([-0.01, -0.03, -0.002], 1),
                      ([-0.01, -0.03, -0.002], 3),
                      ([0.0, -0.05, -0.1], 2)):
            exact = fragment_entropy_change_exact(b, fN)
            series = fragment_entropy_change_series(b, fN)
            assert series == pytest.approx(exact, rel=1e-11, abs=1e-15)

    def test_series_requires_nonpositive_deficits(self):
        with pytest.raises(ValueError):
            fragment_entropy_change_series([0.01], 1)

    def test_moment_series_identity(self):
        # Independent route: Delta H = ln 2 - sum_m <(1+b)^m>^fN / (2m(2m-1)),
        # summed here directly with numpy.
        b = np.array([-0.05, -0.08, -0.02])
        fN = 2
        m = np.arange(1, 3000, dtype=float)
        q = np.mean((1.0 + b)[:, None] ** m[None, :], axis=0)
        reference = LN2 - float(np.sum(q**fN / (2.0 * m * (2.0 * m - 1.0))))
        assert fragment_entropy_change_exact(b, fN) == pytest.approx(
            reference, rel=1e-10
        )

    def test_analytic_form_and_its_gap(self):
        b = [-0.02, -0.025, -0.015]
        fN = 3
        expected = LN2 - h(math.exp(fN * float(np.mean(b))))
        assert analytic_entropy_change(b, fN) == pytest.approx(expected, rel=1e-14)
        # the analytic curve is first order in b; its error shrinks
        # roughly quadratically when b does
        gap = abs(fragment_entropy_change_exact(b, fN)
                  - analytic_entropy_change(b, fN))
        half = [x / 4.0 for x in b]
        gap_half = abs(fragment_entropy_change_exact(half, fN)
                       - analytic_entropy_change(half, fN))
        assert gap_half < gap / 8.0

    def test_halving_ratios_sit_near_second_order(self):
        from photon_darwinism.discrete_oracle import entropy_error_halving

        ratios = entropy_error_halving(-0.002, 8, 6, levels=3)
        assert len(ratios) == 2
        assert all(3.5 <= r <= 4.5 for r in ratios)

    def test_halving_is_blind_to_environment_size_for_uniform_b(self):
        # with every b equal the per-branch moments collapse and D_B
        # drops out of the entropy change entirely
        from photon_darwinism.discrete_oracle import entropy_error_halving

        assert entropy_error_halving(-0.004, 4, 3) == pytest.approx(
            entropy_error_halving(-0.004, 8, 3), rel=1e-9
        )


class TestDiscreteEnv:
    def test_delegation(self):
        env = DiscreteEnv(b=(-0.01, -0.02), fN=2)
        assert env.D_B == 2
        vals, mults = env.spectrum()
        ref_vals, ref_mults = fragment_eigenvalues([-0.01, -0.02], 2)
        assert np.allclose(vals, ref_vals)
        assert np.array_equal(mults, ref_mults)
        assert env.entropy_change() == pytest.approx(
            fragment_entropy_change_exact([-0.01, -0.02], 2), rel=1e-14
        )
        assert env.entropy_change_analytic() == pytest.approx(
            analytic_entropy_change([-0.01, -0.02], 2), rel=1e-14
        )

    def test_warns_outside_perturbative_regime(self):
        with pytest.warns(UserWarning):
            DiscreteEnv(b=(-0.5,), fN=1)

    def test_validation(self):
        with pytest.raises(ValueError):
            DiscreteEnv(b=(-0.01,), fN=0)


def test_discrete_gamma():
    assert discrete_gamma(np.ones(5)) == pytest.approx(1.0, rel=1e-15)
    assert discrete_gamma(np.array([1.0, -1.0])) == 0.0
    assert discrete_gamma(np.array([1.0, 1.0j])) == pytest.approx(0.5, rel=1e-14)


class TestMatrixElement:
    @staticmethod
    def _scenario():
        return Scenario(radius_m=1e-6, permittivity=4.0, dx_m=1e-6,
                        temperature_K=2.725, region=SkyRegion.isotropic())

    def test_deficit_formula(self):
        scn = self._scenario()
        k, t, V = 1e6, 1.0, 1.0
        d = (2.0 * math.pi / 15.0) * 14.0 * scn.effective_radius_m**6 \
            * scn.dx_m**2 * k**6 * 299792458.0 * t / V
        assert matrix_element_diag(k, 0.0, scn, V=V, t=t) == pytest.approx(
            1.0 - d, rel=1e-12
        )

    def test_polar_to_equatorial_deficit_ratio(self):
        scn = self._scenario()
        d_pole = 1.0 - matrix_element_diag(1e6, 0.0, scn, V=1.0, t=1.0)
        d_eq = 1.0 - matrix_element_diag(1e6, math.pi / 2.0, scn, V=1.0, t=1.0)
        assert d_eq / d_pole == pytest.approx(3.0 / 14.0, rel=1e-9)

    def test_deficit_scales_linearly_in_time_and_inverse_volume(self):
        scn = self._scenario()
        d1 = 1.0 - matrix_element_diag(1e6, 0.3, scn, V=1.0, t=1.0)
        d2 = 1.0 - matrix_element_diag(1e6, 0.3, scn, V=2.0, t=4.0)
        assert d2 == pytest.approx(2.0 * d1, rel=1e-9)


class TestDirectionalGrid:
    def test_rows_are_normalized(self):
        grid = scattering_probability_grid(8, 16, math.pi / 2.0)
        assert np.abs(grid.prob.sum(axis=1) - 1.0).max() < 1e-12
        assert grid.D_S == 128
        assert grid.D_B == grid.mask.sum() == 64

    def test_equatorial_cap_masks_half_the_bins(self):
        grid = scattering_probability_grid(10, 20, math.pi / 2.0)
        assert grid.mask.sum() == grid.D_S // 2

    def test_excessive_coupling_is_rejected(self):
        with pytest.raises(ValueError, match="coupling"):
            scattering_probability_grid(8, 16, math.pi / 2.0, coupling=1e3)


class TestDiscreteAlpha:
    def test_full_sphere_scores_zero(self):
        grid = scattering_probability_grid(8, 16, math.pi)
        assert discrete_alpha(grid) == 0.0

    def test_single_direction_is_fully_receptive(self):
        grid = scattering_probability_grid(16, 32, math.pi)
        mask = np.zeros(grid.D_S, dtype=bool)
        mask[5] = True
        assert discrete_alpha(grid, mask=mask) == pytest.approx(1.0, abs=1e-4)

    def test_empty_mask_is_rejected(self):
        grid = scattering_probability_grid(8, 16, math.pi)
        with pytest.raises(ValueError):
            discrete_alpha(grid, mask=np.zeros(grid.D_S, dtype=bool))

    def test_refinement_approaches_the_continuum(self):
        target = 1135.0 / 1280.0
        errs = []
        for n_theta in (8, 16):
            grid = scattering_probability_grid(n_theta, 2 * n_theta, math.pi / 2.0)
            errs.append(abs(discrete_alpha(grid) - target))
        assert errs[1] < 0.6 * errs[0]


def test_planck_spectral_nodes_reproduce_zeta_moments():
    kappa, w = planck_spectral_nodes()
    assert w.sum() == pytest.approx(1.0, rel=1e-10)
    sixth = float(np.sum(w * kappa**6))
    assert sixth == pytest.approx(
        math.factorial(8) * ZETA_9 / (2.0 * ZETA_3), rel=1e-8
    )
    zeta6 = math.pi**6 / 945.0
    third = float(np.sum(w * kappa**3))
    assert third == pytest.approx(math.factorial(5) * zeta6 / (2.0 * ZETA_3),
                                  rel=1e-8)


class TestExactGeneralMi:
    def test_two_branch_reduction(self):
        gamma = math.exp(-8.0)
        gm = np.array([[1.0, gamma], [gamma, 1.0]])
        cat = CatSpec(probs=(0.5, 0.5), gamma=gm)
        for f in (0.1, 0.2, 0.5, 0.8):
            assert mi_exact_general(cat, f) == pytest.approx(
                mutual_information(gamma, 1.0, f), abs=1e-10
            )

    def test_uniform_three_branch_reduction(self):
        gamma = math.exp(-8.0)
        gm = np.full((3, 3), gamma)
        np.fill_diagonal(gm, 1.0)
        cat = CatSpec(probs=(1 / 3, 1 / 3, 1 / 3), gamma=gm)
        assert mi_exact_general(cat, 0.2) == pytest.approx(
            mi_mway(gamma, 0.2, 3), abs=1e-10
        )

    def test_lone_branch_has_no_story_to_tell(self):
        gm = np.array([[1.0, 0.1], [0.1, 1.0]])
        cat = CatSpec(probs=(1.0, 0.0), gamma=gm)
        assert mi_exact_general(cat, 0.3) == pytest.approx(0.0, abs=1e-12)

    def test_needs_a_factor_matrix(self):
        with pytest.raises(ValueError):
            mi_exact_general(CatSpec(probs=(0.5, 0.5)), 0.2)

    def test_fragment_fraction_validated(self):
        gm = np.array([[1.0, 0.1], [0.1, 1.0]])
        cat = CatSpec(probs=(0.5, 0.5), gamma=gm)
        with pytest.raises(ValueError):
            mi_exact_general(cat, 1.5)

    def test_inconsistent_overlaps_are_caught(self):
        # Overlap magnitudes with no realizable set of states: two strong
        # overlaps forbid the third one being tiny.
        tiny = math.exp(-8.0)
        gm = np.array([[1.0, 0.99, tiny],
                       [0.99, 1.0, 0.99],
                       [tiny, 0.99, 1.0]])
        cat = CatSpec(probs=(1 / 3, 1 / 3, 1 / 3), gamma=gm)
        with pytest.raises(ArithmeticError):
            mi_exact_general(cat, 0.3)


class TestOracleBattery:
    def test_everything_passes(self):
        report = oracle_battery(seed=0)
        assert report["all_passed"] is True
        assert report["seed"] == 0
        assert len(report["checks"]) == 18
        names = [c["name"] for c in report["checks"]]
        assert len(set(names)) == len(names)
        assert all(c["passed"] for c in report["checks"])

    def test_reseeding_does_not_break_it(self):
        report = oracle_battery(seed=1234)
        assert report["all_passed"] is True

    def test_report_is_json_serializable(self):
        json.dumps(oracle_battery(seed=0))
