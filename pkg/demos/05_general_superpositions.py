"""Beyond the balanced cat: unbalanced weights and many branches.

The balanced two-branch superposition is the textbook case. Here we tilt
the weights, add branches, and finally hand the closed forms a messy
pairwise decoherence matrix to see what survives: plateaus move to the
reduced entropy of the mixture, and interval bounds take over where no
single decoherence factor describes the cat.
"""

import math

import numpy as np

from photon_darwinism import (
    CatSpec,
    LN2,
    max_entropy,
    mi_exact_general,
    mi_interval_bounds,
    mi_mway,
    mi_mway_limit,
    mi_unbalanced,
    mi_unbalanced_limit,
)

GAMMA = math.exp(-10.0)


def probs_from_mu(mu):
    root = math.sqrt(mu)
    return np.array([(1.0 + root) / 2.0, (1.0 - root) / 2.0])


print("== unbalanced two-branch cat, deep decoherence (Gamma = e^-10) ==")
print("   f     mu=0      mu=0.25   mu=0.64   mu=0.9")
for f in np.linspace(0.0, 1.0, 11):
    cells = "".join(
        f"{mi_unbalanced(GAMMA, float(f), mu):8.5f}  "
        for mu in (0.0, 0.25, 0.64, 0.9)
    )
    print(f"  {f:.1f}   {cells}")
print()
print("Plateau heights vs the mixture entropy ceiling:")
for mu in (0.0, 0.25, 0.64, 0.9):
    ceiling = max_entropy(probs_from_mu(mu))
    mid = mi_unbalanced(1e-300, 0.5, mu)
    print(f"  mu = {mu:4g}: plateau {mid:.6f}, ceiling {ceiling:.6f}"
          f"  ({ceiling / LN2:.3f} of ln 2)")
print()

# As mu -> 1 the bit fades away. Rescaling by the ceiling shows the
# shape converging (slowly, like 1/log) to a universal curve.
print("== mu -> 1: renormalized curves approach the limit shape ==")
print("   f     mu=0.9    mu=0.99   mu=0.9999  limit")
for f in (0.1, 0.3, 0.5, 0.7, 0.9):
    cells = "".join(
        f"{mi_unbalanced(GAMMA, f, mu) / max_entropy(probs_from_mu(mu)):8.5f}  "
        for mu in (0.9, 0.99, 0.9999)
    )
    print(f"  {f:.1f}   {cells} {mi_unbalanced_limit(GAMMA, f):8.5f}")
print()

print("== M-way cats: more branches, higher plateau ==")
print("   f     M=2       M=3       M=5       M=10")
for f in np.linspace(0.0, 1.0, 11):
    cells = "".join(
        f"{mi_mway(GAMMA, float(f), M):8.5f}  " for M in (2, 3, 5, 10)
    )
    print(f"  {f:.1f}   {cells}")
for M in (2, 3, 5, 10):
    plateau = mi_mway(1e-300, 0.5, M)
    print(f"  M = {M:3d}: plateau {plateau:.6f} vs ln M = {math.log(M):.6f}")
print()

print("== M -> infinity, renormalized by ln M ==")
print("   f     M=3       M=10      M=100     limit")
for f in (0.1, 0.3, 0.5, 0.7, 0.9):
    cells = "".join(
        f"{mi_mway(GAMMA, f, M) / math.log(M):8.5f}  " for M in (3, 10, 100)
    )
    print(f"  {f:.1f}   {cells} {mi_mway_limit(GAMMA, f):8.5f}")
print()

# Real branch pairs need not share one decoherence factor: branches far
# apart in space decohere faster. With a full matrix the exact spectrum
# is still computable, and cheap interval bounds bracket it.
probs = np.array([0.5, 0.3, 0.2])
gm = np.array([
    [1.0, 2e-3, 5e-4],
    [2e-3, 1.0, 3e-3],
    [5e-4, 3e-3, 1.0],
])
cat = CatSpec(probs=probs, gamma=gm)
print("== three branches, non-uniform pairwise factors ==")
print("   f     lower     exact     upper")
for f in (0.1, 0.2, 0.3, 0.4, 0.5):
    lo, hi = mi_interval_bounds(gm, probs, f)
    exact = mi_exact_general(cat, f)
    print(f"  {f:.1f}   {lo:.6f}  {exact:.6f}  {hi:.6f}")
print()
print(f"ceiling for these weights: {max_entropy(probs):.6f} nats")
