"""Redundancy growth: how many copies of the record the sky holds.

Once the partial-information plateau forms, we can ask how small a
fragment still captures all but a deficit delta of the classical bit.
The redundancy R_delta is the number of such fragments the environment
splits into. It grows linearly with scattered photons, i.e. linearly
in t / tau_D, with slope set by the receptivity alpha.
"""

import numpy as np

from photon_darwinism import (
    redundancy_estimate,
    redundancy_exact,
    redundancy_lower_bound,
)

DELTA = 0.01

print(f"== redundancy at deficit delta = {DELTA}, alpha = 1 ==")
print("  t/tau_D     exact        estimate     lower bound")
for t in (10.0, 30.0, 100.0, 300.0, 1000.0):
    r = redundancy_exact(None, 1.0, DELTA, t_over_tauD=t)
    est = redundancy_estimate(t, 1.0, DELTA)
    low = redundancy_lower_bound(t, DELTA)
    print(f"  {t:7g}   {r:10.4f}   {est:10.4f}   {low:10.4f}")
print()
print("The estimate tracks the exact value to a fraction of a copy;")
print("the information-theoretic lower bound runs a few percent shy.")
print()

# Below roughly t = 5 the plateau has not formed and no fragment
# smaller than half the sky meets the deficit: redundancy is undefined.
print("== early times: no plateau, no redundancy ==")
for t in (1.0, 3.0, 5.0, 7.0):
    r = redundancy_exact(None, 1.0, DELTA, t_over_tauD=t)
    label = "undefined (no plateau yet)" if r is None else f"{r:.4f}"
    print(f"  t = {t:g}: R = {label}")
print()

# Receptivity rescales the clock: alpha enters only through alpha * t.
print("== alpha dependence at t = 200 ==")
print("  alpha    exact        alpha * t")
for alpha in (1.0, 0.75, 0.5, 0.25):
    r = redundancy_exact(None, alpha, DELTA, t_over_tauD=200.0)
    print(f"  {alpha:5.2f}   {r:10.4f}   {alpha * 200.0:8.1f}")
print()

# A tighter tolerance asks each fragment for more of the bit, so fewer
# fragments qualify; the cost is only logarithmic in delta.
print("== delta dependence at t = 200, alpha = 1 ==")
print("  delta     exact        estimate")
for delta in (0.1, 0.03, 0.01, 0.003, 0.001):
    r = redundancy_exact(None, 1.0, delta, t_over_tauD=200.0)
    est = redundancy_estimate(200.0, 1.0, delta)
    print(f"  {delta:6g}   {r:10.4f}   {est:10.4f}")
print()

# Relative slack between estimate and exact is flat in time: both are
# linear with the same slope, offset by a fixed sub-0.1% factor.
ts = np.array([50.0, 100.0, 200.0, 350.0, 500.0])
rel = [
    abs(redundancy_estimate(t, 1.0, DELTA) / redundancy_exact(None, 1.0, DELTA, t_over_tauD=t) - 1.0)
    for t in ts
]
print("estimate vs exact relative gap over t in "
      f"[{ts[0]:g}, {ts[-1]:g}]: "
      f"min {min(rel):.2e}, max {max(rel):.2e}")
