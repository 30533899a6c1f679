"""Tests for the receptivity fraction alpha and its closed disk form."""

import math

import numpy as np
import pytest

from photon_darwinism.receptivity import (
    alpha_disk,
    alpha_numeric,
    receptivity_result,
    redundancy_rate,
)
from photon_darwinism.sky import SkyRegion

# Frozen once from a 50-digit evaluation of the closed form. Values are
# alpha for a disk of half-angle theta0 tilted by chi, both in degrees.
ALPHA_GRID = {
    (10, 0): 0.9999996879, (10, 45): 0.9999004618, (10, 90): 0.9994552439,
    (30, 0): 0.9997897228, (30, 45): 0.9934078616, (30, 90): 0.9717118573,
    (50, 0): 0.9959975698, (50, 45): 0.9617279004, (50, 90): 0.8853862432,
    (70, 0): 0.9727575935, (70, 45): 0.8795093502, (70, 90): 0.7458495643,
    (90, 0): 0.88671875, (90, 45): 0.7109375, (90, 90): 0.53515625,
    (110, 0): 0.6817132135, (110, 45): 0.4730684177, (110, 90): 0.3009030169,
    (130, 0): 0.3918372419, (130, 45): 0.2472915264, (130, 90): 0.1285008024,
    (150, 0): 0.1448240221, (150, 45): 0.08858504172, (150, 90): 0.0375628582,
    (170, 0): 0.01601483752, (170, 45): 0.009730515545, (170, 90): 0.003523444312,
}


class TestAlphaDisk:
    def test_frozen_grid(self):
        for (theta0, chi), expected in ALPHA_GRID.items():
            got = alpha_disk(math.radians(theta0), math.radians(chi))
            assert got == pytest.approx(expected, rel=2e-9), (theta0, chi)

    def test_hemisphere_rationals(self):
        # Aligned and equatorial hemispheres come out as exact rationals.
        assert alpha_disk(math.pi / 2.0, 0.0) == pytest.approx(1135.0 / 1280.0,
                                                               rel=1e-14)
        assert alpha_disk(math.pi / 2.0, math.pi / 2.0) == pytest.approx(
            685.0 / 1280.0, rel=1e-14
        )

    def test_limits(self):
        assert alpha_disk(math.pi, 0.0) == pytest.approx(0.0, abs=1e-12)
        # a vanishing cap is fully receptive
        assert alpha_disk(1e-4, 0.0) == pytest.approx(1.0, abs=1e-6)

    def test_mirror_symmetry_in_tilt(self):
        # Reflecting the tilt through the equator leaves alpha unchanged.
        for theta0_deg in (25.0, 70.0, 140.0):
            for chi_deg in (15.0, 60.0, 85.0):
                a = alpha_disk(math.radians(theta0_deg), math.radians(chi_deg))
                b = alpha_disk(math.radians(theta0_deg),
                               math.radians(180.0 - chi_deg))
                assert a == pytest.approx(b, rel=1e-12)

    def test_monotone_shrinks_with_aperture(self):
        vals = [alpha_disk(math.radians(t), 0.3) for t in np.linspace(1, 179, 90)]
        assert all(b <= a + 1e-12 for a, b in zip(vals, vals[1:]))


class TestAlphaNumeric:
    def test_matches_closed_form(self):
        for theta0_deg, chi_deg in ((30.0, 0.0), (70.0, 45.0), (150.0, 90.0)):
            region = SkyRegion.disk(math.radians(theta0_deg), math.radians(chi_deg))
            closed = alpha_disk(math.radians(theta0_deg), math.radians(chi_deg))
            assert alpha_numeric(region) == pytest.approx(closed, abs=1e-10)

    def test_point_region_is_fully_receptive(self):
        assert alpha_numeric(SkyRegion.point()) == 1.0

    def test_isotropic_region_has_nothing_left_to_learn(self):
        assert alpha_numeric(SkyRegion.isotropic()) == 0.0

    def test_custom_half_sphere(self):
        rows, cols = 100, 200
        u = -1.0 + (np.arange(rows) + 0.5) * (2.0 / rows)
        phi = (np.arange(cols) + 0.5) * (2.0 * math.pi / cols)
        mask = (u > 0.0)[:, None] & np.ones(cols, dtype=bool)
        region = SkyRegion.custom(u, phi, mask)
        # midpoint cells converge at second order; 100 rows leaves ~3e-5
        assert alpha_numeric(region) == pytest.approx(1135.0 / 1280.0, abs=2e-4)


class TestReceptivityResult:
    def test_wiring(self):
        region = SkyRegion.disk(math.pi / 3.0)
        res = receptivity_result(region, tau_D_inv=2.0, rate_ratio=0.353125)
        assert res.alpha == pytest.approx(alpha_numeric(region), rel=1e-14)
        assert res.tau_R_inv == pytest.approx(res.alpha * 2.0, rel=1e-14)
        assert res.tau_R_over_TD == pytest.approx(res.alpha * 0.353125, rel=1e-14)
        assert res.numerator <= res.denominator

    def test_rates_optional(self):
        res = receptivity_result(SkyRegion.disk(1.0))
        assert res.tau_R_inv is None
        assert res.tau_R_over_TD is None

    def test_point_region_has_degenerate_integrals(self):
        res = receptivity_result(SkyRegion.point(), tau_D_inv=3.0)
        assert res.alpha == 1.0
        assert res.numerator == 0.0
        assert res.denominator == 0.0
        assert res.tau_R_inv == pytest.approx(3.0)


def test_redundancy_rate():
    assert redundancy_rate(0.5, 4.0) == pytest.approx(2.0, rel=1e-15)
    with pytest.raises(ValueError):
        redundancy_rate(1.5, 1.0)
    with pytest.raises(ValueError):
        redundancy_rate(0.5, -1.0)
