"""Physical-unit layer: thermal photon flux and decoherence rates.

All SI handling lives here. The downstream information-theoretic modules
consume only dimensionless bundles (decoherence exponent, receptivity,
fragment fraction), so this module is the single place where CODATA
constants and temperature powers appear.

Rate formulas are evaluated in staged dimensionless groups, e.g.
(k_B T / hbar c)^8 * (k_B T / hbar), to keep intermediates inside the
double-precision exponent range for any sane temperature.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np

from .sky import SkyRegion, load_indicator_grid, region_nodes, solid_angle

__all__ = [
    "SPEED_OF_LIGHT",
    "BOLTZMANN",
    "HBAR",
    "ZETA_3",
    "ZETA_4",
    "ZETA_9",
    "Scenario",
    "ScenarioError",
    "RateResult",
    "effective_radius",
    "photon_number_density",
    "patch_irradiance",
    "isotropic_rate",
    "decoherence_rate",
    "disk_rate",
    "point_source_rate",
    "decoherence_factor",
    "parse_scenario",
]

SPEED_OF_LIGHT = 299792458.0          # m / s, exact
BOLTZMANN = 1.380649e-23              # J / K, exact
HBAR = 1.054571817e-34                # J s, CODATA value derived from exact h

# Riemann zeta values entering the thermal spectral integrals.
ZETA_3 = 1.2020569031595943
ZETA_4 = 1.0823232337111382           # pi^4 / 90
ZETA_9 = 1.0020083928260822

_FACTORIAL_8 = 40320.0


class ScenarioError(ValueError):
    """Raised for malformed scenario configuration input."""


def effective_radius(radius: float, permittivity: float,
                     denominator_offset: float = 2.0) -> float:
    """Scattering-effective radius of a dielectric sphere.

    The dipole polarizability contrast gives a_eff = a ((eps - 1)/(eps + 2))^(1/3),
    the Clausius-Mossotti factor. A variant with (eps - 2) in the denominator
    circulates in print; pass denominator_offset=-2.0 to evaluate it for
    comparison. It is not the default because it is negative for eps < 2 and
    disagrees with the standard polarizability.
    """
    if permittivity <= 1.0:
        raise ValueError(
            f"permittivity must exceed 1 for scattering contrast, got {permittivity}"
        )
    denom = permittivity + denominator_offset
    if denom <= 0.0:
        raise ValueError(
            f"contrast denominator is not positive (eps = {permittivity}, "
            f"offset = {denominator_offset})"
        )
    return radius * ((permittivity - 1.0) / denom) ** (1.0 / 3.0)


def photon_number_density(temperature: float, omega: float) -> float:
    """Thermal photon number density (1/m^3) from a patch of solid angle omega.

    omega zeta(3) (k_B T)^3 / (2 pi^3 c^3 hbar^3); linear in omega, with the
    full sphere reproducing the standard blackbody photon density
    2 zeta(3) (k_B T / hbar c)^3 / pi^2.
    """
    if temperature <= 0.0:
        raise ValueError(f"temperature must be positive, got {temperature}")
    if not 0.0 <= omega <= 4.0 * math.pi + 1e-12:
        raise ValueError(f"solid angle out of range: {omega}")
    y = BOLTZMANN * temperature / (HBAR * SPEED_OF_LIGHT)
    return omega * ZETA_3 * y**3 / (2.0 * math.pi**3)


def patch_irradiance(temperature: float, omega: float) -> float:
    """Irradiance (W/m^2) delivered by a blackbody patch at normal incidence.

    omega * 3 zeta(4) (k_B T)^4 / (2 pi^3 hbar^3 c^2), which is the usual
    sigma T^4 / pi radiance times the solid angle. Used to hand a finite
    patch to the point-source rate on equal photon-flux footing.
    """
    if temperature <= 0.0:
        raise ValueError(f"temperature must be positive, got {temperature}")
    y = BOLTZMANN * temperature / (HBAR * SPEED_OF_LIGHT)
    return omega * 3.0 * ZETA_4 / (2.0 * math.pi**3) * y**3 \
        * BOLTZMANN * temperature * SPEED_OF_LIGHT


@dataclass(frozen=True)
class Scenario:
    """Physical setup: sphere, separation, source temperature and region.

    The separation direction is the global z axis; region tilt is encoded
    in the region itself. irradiance_W_m2 is only consulted by the
    point-source rate.
    """

    radius_m: float
    permittivity: float
    dx_m: float
    temperature_K: float
    region: SkyRegion
    irradiance_W_m2: float | None = None

    def __post_init__(self):
        if self.radius_m <= 0.0:
            raise ScenarioError(f"radius_m must be positive, got {self.radius_m}")
        if self.permittivity <= 1.0:
            raise ScenarioError(
                f"permittivity must exceed 1, got {self.permittivity}"
            )
        if self.dx_m <= 0.0:
            raise ScenarioError(f"dx_m must be positive, got {self.dx_m}")
        if self.temperature_K <= 0.0:
            raise ScenarioError(
                f"temperature_K must be positive, got {self.temperature_K}"
            )
        lam = 2.0 * math.pi * HBAR * SPEED_OF_LIGHT / (
            BOLTZMANN * self.temperature_K)
        # Outside the dipole regime the cross section model is wrong, but
        # the numbers still evaluate; warn instead of refusing.
        if lam < 10.0 * self.radius_m or lam < 10.0 * self.dx_m:
            warnings.warn(
                "thermal wavelength %.3g m is not large compared to the sphere "
                "(%.3g m) or the separation (%.3g m); dipole-regime formulas "
                "are being extrapolated" % (lam, self.radius_m, self.dx_m),
                stacklevel=2,
            )

    @property
    def effective_radius_m(self) -> float:
        return effective_radius(self.radius_m, self.permittivity)


@dataclass(frozen=True)
class RateResult:
    """Decoherence rate for a scenario, in SI and relative to the isotropic
    reference rate for the same sphere, separation and temperature."""

    tau_D_inv: float      # 1/s
    T_D_inv: float        # 1/s, full-sky value
    ratio: float          # tau_D_inv / T_D_inv, in [0, 1]


def isotropic_rate(scenario: Scenario) -> float:
    """Full-sky decoherence rate (1/s): the fastest the source can decohere.

    (16 * 8! zeta(9) / 9 pi) * a_eff^6 dx^2 (k_B T)^9 / (c^8 hbar^9).
    """
    y = BOLTZMANN * scenario.temperature_K / (HBAR * SPEED_OF_LIGHT)
    prefactor = 16.0 * _FACTORIAL_8 * ZETA_9 / (9.0 * math.pi)
    return prefactor * scenario.effective_radius_m**6 * scenario.dx_m**2 \
        * y**8 * (BOLTZMANN * scenario.temperature_K / HBAR)


def decoherence_rate(scenario: Scenario, order: int = 64) -> RateResult:
    """Decoherence rate for the scenario's sky region, by quadrature.

    The region enters through the average of 3 + 11 cos^2(theta) over the
    patch, theta measured from the separation axis, normalized so that the
    isotropic region returns the full-sky rate exactly.
    """
    big_rate = isotropic_rate(scenario)
    region = scenario.region
    if region.kind == "point":
        raise ValueError(
            "a point region carries zero solid angle; use point_source_rate "
            "with an irradiance instead"
        )
    if solid_angle(region) == 0.0:
        warnings.warn("region has zero solid angle; decoherence rate is 0",
                      stacklevel=2)
        return RateResult(tau_D_inv=0.0, T_D_inv=big_rate, ratio=0.0)
    pts, ww = region_nodes(region, order)
    # integral over the region of (3 + 11 cos^2 theta) d_Omega
    patch_integral = float(np.sum(ww * (3.0 + 11.0 * pts[:, 2] ** 2)))
    ratio = patch_integral * 3.0 / (80.0 * math.pi)
    return RateResult(tau_D_inv=ratio * big_rate, T_D_inv=big_rate, ratio=ratio)


def disk_rate(theta0: float, chi: float) -> float:
    """Closed-form disk decoherence rate in units of the full-sky rate.

    (1/80) [40 - cos(theta0) (51 - 33 cos^2 chi)
                + cos^3(theta0) (11 - 33 cos^2 chi)].
    Nondecreasing in theta0, equal to 1/2 at a hemisphere for every tilt,
    and summing to 1 with the complementary disk (pi - theta0, pi - chi).
    """
    if not 0.0 <= theta0 <= math.pi:
        raise ValueError(f"theta0 must be in [0, pi], got {theta0}")
    ct = math.cos(theta0)
    cc2 = math.cos(chi) ** 2
    return (40.0 - ct * (51.0 - 33.0 * cc2) + ct**3 * (11.0 - 33.0 * cc2)) / 80.0


def point_source_rate(scenario: Scenario, theta: float) -> float:
    """Decoherence rate (1/s) for an unresolved source of given irradiance.

    (4 pi / 15)(8! zeta(9) / 3! zeta(4)) (3 + 11 cos^2 theta)
        * I a_eff^6 dx^2 (k_B T)^5 / (c^6 hbar^6),
    theta being the angle between the source direction and the separation
    axis. The temperature only shapes the thermal spectrum here; the flux
    normalization is carried entirely by the irradiance I.
    """
    irradiance = scenario.irradiance_W_m2
    if irradiance is None or irradiance <= 0.0:
        raise ValueError("point_source_rate needs a positive irradiance_W_m2")
    y = BOLTZMANN * scenario.temperature_K / (HBAR * SPEED_OF_LIGHT)
    prefactor = (4.0 * math.pi / 15.0) * _FACTORIAL_8 * ZETA_9 / (6.0 * ZETA_4)
    angular = 3.0 + 11.0 * math.cos(theta) ** 2
    return prefactor * angular * irradiance \
        * scenario.effective_radius_m**6 * scenario.dx_m**2 \
        * y**5 / (SPEED_OF_LIGHT * HBAR)


def decoherence_factor(t: float, tau_D_inv: float) -> float:
    """Remaining squared coherence exp(-t * rate) after time t seconds."""
    if t < 0.0:
        raise ValueError(f"elapsed time must be nonnegative, got {t}")
    return math.exp(-t * tau_D_inv)


_REQUIRED_KEYS = ("radius_m", "permittivity", "dx_m", "temperature_K", "region")
_OPTIONAL_KEYS = ("irradiance_W_m2",)


def _parse_region(value: str) -> SkyRegion:
    parts = value.split(":")
    kind = parts[0].strip().lower()
    if kind == "isotropic" and len(parts) == 1:
        return SkyRegion.isotropic()
    if kind == "disk" and len(parts) == 3:
        theta0 = math.radians(float(parts[1]))
        chi = math.radians(float(parts[2]))
        return SkyRegion.disk(theta0=theta0, chi=chi)
    if kind == "point" and len(parts) == 2:
        theta = math.radians(float(parts[1]))
        from .sky import Direction
        return SkyRegion.point(Direction(cos_theta=math.cos(theta)))
    if kind == "custom" and len(parts) >= 2:
        return load_indicator_grid(":".join(parts[1:]))
    raise ValueError(
        f"bad region spec {value!r}; expected disk:<theta0_deg>:<chi_deg>, "
        "point:<theta_deg>, isotropic, or custom:<path>"
    )


def parse_scenario(path) -> Scenario:
    """Read a key-value scenario file.

    Lines are `key = value`; blank lines and # comments are skipped. Keys
    are radius_m, permittivity, dx_m, temperature_K, region and the
    optional irradiance_W_m2.
    """
    values: dict[str, str] = {}
    with open(path) as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ScenarioError(f"{path}:{lineno}: expected key = value")
            key, _, val = line.partition("=")
            key = key.strip()
            if key not in _REQUIRED_KEYS + _OPTIONAL_KEYS:
                raise ScenarioError(f"{path}:{lineno}: unknown scenario key {key!r}")
            if key in values:
                raise ScenarioError(f"{path}:{lineno}: duplicate key {key!r}")
            values[key] = val.strip()
    missing = [k for k in _REQUIRED_KEYS if k not in values]
    if missing:
        raise ScenarioError(f"{path}: missing scenario keys: {', '.join(missing)}")
    try:
        region = _parse_region(values["region"])
    except (ValueError, OSError) as exc:
        raise ScenarioError(f"{path}: region: {exc}") from exc
    kwargs = {}
    for key in ("radius_m", "permittivity", "dx_m", "temperature_K"):
        try:
            kwargs[key] = float(values[key])
        except ValueError as exc:
            raise ScenarioError(f"{path}: {key}: {exc}") from exc
    if "irradiance_W_m2" in values:
        try:
            kwargs["irradiance_W_m2"] = float(values["irradiance_W_m2"])
        except ValueError as exc:
            raise ScenarioError(f"{path}: irradiance_W_m2: {exc}") from exc
    return Scenario(region=region, **kwargs)
