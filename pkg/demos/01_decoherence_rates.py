"""How fast does scattered blackbody light localize a small sphere?

A dielectric sphere held in a superposition of two positions dx apart is
watched by every photon that scatters off it. This script builds a few
illumination scenarios and prints the resulting decoherence rates: the
full-sky reference rate, the slowdown for partial sky coverage, and the
point-source limit.
"""

import dataclasses
import math

from photon_darwinism import (
    Scenario,
    SkyRegion,
    decoherence_factor,
    decoherence_rate,
    disk_rate,
    patch_irradiance,
    photon_number_density,
    point_source_rate,
)

# A 1 micron radius sphere, branches separated by 1 micron, bathed in the
# cosmic microwave background.
cmb = Scenario(radius_m=1e-6, permittivity=4.0, dx_m=1e-6,
               temperature_K=2.725, region=SkyRegion.isotropic())

full = decoherence_rate(cmb)
tau_d = 1.0 / full.tau_D_inv
print("== micron sphere in the CMB ==")
print(f"photon density          {photon_number_density(2.725, 4 * math.pi):.3e} per m^3")
print(f"T_D^-1 (full sky)       {full.T_D_inv:.3e} per s")
print(f"tau_D                   {tau_d:.3e} s  (~{tau_d / 3.15e7:.1f} years)")
print(f"overlap after 1 year    {decoherence_factor(3.15e7, full.tau_D_inv):.4f}")
print()

# The same sphere lit only by a cap of sky. The rate ratio is a pure
# geometry factor, identical for every sphere and temperature.
print("== partial sky coverage (rate relative to isotropic) ==")
print("theta0   chi=0     chi=45    chi=90")
for theta0 in (10, 30, 60, 90, 120, 150, 180):
    row = [disk_rate(math.radians(theta0), math.radians(chi))
           for chi in (0, 45, 90)]
    print(f"{theta0:5d}   {row[0]:.5f}   {row[1]:.5f}   {row[2]:.5f}")
print()

scn60 = dataclasses.replace(cmb, region=SkyRegion.disk(math.radians(60.0)))
res60 = decoherence_rate(scn60)
print(f"60 degree cap: quadrature ratio {res60.ratio:.6f}, "
      f"closed form {disk_rate(math.radians(60.0), 0.0):.6f}")
print()

# A warm, small sphere decoheres much faster: the rate carries (k_B T)^9
# through the density times the sixth spectral moment.
warm = Scenario(radius_m=5e-8, permittivity=4.0, dx_m=1e-7,
                temperature_K=300.0, region=SkyRegion.isotropic())
warm_rate = decoherence_rate(warm)
print("== 50 nm sphere in a 300 K room ==")
print(f"tau_D^-1                {warm_rate.tau_D_inv:.3e} per s")
print(f"tau_D                   {1.0 / warm_rate.tau_D_inv:.3e} s")
print()

# Point-source limit: a tiny 1 degree patch behaves like a beam from a
# single direction once its irradiance is matched.
theta0 = math.radians(1.0)
patch = dataclasses.replace(cmb, region=SkyRegion.disk(theta0))
beam = dataclasses.replace(
    cmb, region=SkyRegion.point(),
    irradiance_W_m2=patch_irradiance(2.725, patch.region.solid_angle_sr),
)
general = decoherence_rate(patch).tau_D_inv
point = point_source_rate(beam, 0.0)
print("== point-source consistency at theta0 = 1 degree ==")
print(f"patch quadrature        {general:.6e} per s")
print(f"matched beam            {point:.6e} per s")
print(f"relative gap            {abs(point - general) / general:.2e}")

# The beam rate depends on where the source sits relative to the
# separation axis: (3 + 11 cos^2 theta) / 14 of the polar value.
print()
print("beam angle   rate / polar rate")
for deg in (0, 30, 60, 90):
    ratio = point_source_rate(beam, math.radians(deg)) / point
    print(f"{deg:10d}   {ratio:.4f}")
