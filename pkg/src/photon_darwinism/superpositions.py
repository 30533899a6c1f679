"""Information capture for unbalanced and many-component superpositions.

The balanced two-branch results generalize along two axes: unequal branch
weights and M distinguishable branches. Both reduce to substitutions
inside the same entropy kernel h. When the branch pairs decohere at
unequal rates no closed form survives, but replacing every pairwise
factor with the weakest (largest) or strongest (smallest) one yields
computable surrogates that bracket the exact answer.

All functions here assume the point-source geometry (receptivity one);
the fragment fraction enters only through powers of the decoherence
factors.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np
from scipy.special import xlogy

from .entropy_kernels import LN2, Nats, h, m_spectrum_entropy

__all__ = [
    "CatSpec",
    "max_entropy",
    "mi_unbalanced",
    "mi_unbalanced_limit",
    "mi_mway",
    "mi_mway_limit",
    "mi_interval_bounds",
]

# Above this pairwise factor the surrogate ordering (weakest pair below,
# strongest pair above) is no longer guaranteed.
BOUND_VALIDITY_GAMMA = math.exp(-5.0)


def _check_unit(name: str, value: float) -> float:
    if not 0.0 <= value <= 1.0:
        raise ValueError(f"{name} must be in [0, 1], got {value}")
    return value


def _check_probs(probs) -> np.ndarray:
    probs = np.asarray(probs, dtype=float)
    if probs.ndim != 1 or probs.size < 2:
        raise ValueError("need at least two branch probabilities")
    if np.any(probs < 0.0) or abs(probs.sum() - 1.0) > 1e-10:
        raise ValueError("branch probabilities must be nonnegative and sum to 1")
    return probs


def _check_factor_matrix(gamma) -> np.ndarray:
    gamma = np.asarray(gamma, dtype=float)
    if gamma.ndim != 2 or gamma.shape[0] != gamma.shape[1]:
        raise ValueError("factor matrix must be square")
    if not np.allclose(gamma, gamma.T, atol=1e-12):
        raise ValueError("factor matrix must be symmetric")
    if np.any(np.abs(np.diag(gamma) - 1.0) > 1e-12):
        raise ValueError("factor matrix must have a unit diagonal")
    if np.any(gamma < 0.0) or np.any(gamma > 1.0 + 1e-12):
        raise ValueError("pairwise factors must lie in [0, 1]")
    return gamma


@dataclass(frozen=True)
class CatSpec:
    """Superposition of M branches: weights plus pairwise decoherence factors.

    gamma[a, b] is the decoherence factor of the branch pair (a, b) after
    the full photon environment has acted; the diagonal is one by
    definition. A None matrix means the factors are uniform and supplied
    separately to whichever closed form consumes the spec.
    """

    probs: np.ndarray
    gamma: np.ndarray | None = None

    def __post_init__(self):
        probs = _check_probs(self.probs)
        object.__setattr__(self, "probs", probs)
        if self.gamma is not None:
            gamma = _check_factor_matrix(self.gamma)
            if gamma.shape[0] != probs.size:
                raise ValueError(
                    f"factor matrix is {gamma.shape[0]}x{gamma.shape[0]} "
                    f"but there are {probs.size} branches"
                )
            object.__setattr__(self, "gamma", gamma)

    @property
    def M(self) -> int:
        return self.probs.size

    @property
    def mu(self) -> float:
        """Imbalance (p1 - p2)^2 of a two-branch cat."""
        if self.M != 2:
            raise ValueError("mu is defined for two-branch cats only")
        return float((self.probs[0] - self.probs[1]) ** 2)


def max_entropy(probs) -> Nats:
    """Shannon entropy of the branch weights: the classical plateau.

    For two branches this equals ln 2 - h(mu) with mu = (p1 - p2)^2, the
    same kernel that runs the time dependence.
    """
    probs = _check_probs(probs)
    return float(-xlogy(probs, probs).sum())


def mi_unbalanced(gamma: float, f: float, mu: float) -> Nats:
    """Mutual information for branch weights with imbalance mu, point source.

    Every kernel argument x of the balanced result is displaced to
    mu + (1 - mu) x, which interpolates between the balanced case at
    mu = 0 and a lone classical branch at mu = 1.
    """
    _check_unit("gamma", gamma)
    _check_unit("f", f)
    _check_unit("mu", mu)

    def shifted(x):
        return h(mu + (1.0 - mu) * x)

    return (
        LN2
        + shifted(gamma ** (1.0 - f))
        - shifted(gamma ** f)
        - shifted(gamma)
    )


def mi_unbalanced_limit(gamma: float, f: float) -> float:
    """Limit of mi_unbalanced / max_entropy as mu -> 1.

    Both numerator and denominator vanish; their ratio tends to
    1 + Gamma^(1-f) - Gamma^f - Gamma, so even an almost-classical state
    spreads its (tiny) record with the same fragment profile.
    """
    _check_unit("gamma", gamma)
    _check_unit("f", f)
    return 1.0 + gamma ** (1.0 - f) - gamma ** f - gamma


def mi_mway(gamma: float, f: float, M: int) -> Nats:
    """Mutual information for M equally weighted branches, common factor.

    Each of the three reduced states carries the M-point spectrum with
    pairwise element Gamma^(w/2) at w = f, 1, 1 - f; the half power is
    the amplitude-level overlap of a single branch pair.
    """
    _check_unit("gamma", gamma)
    _check_unit("f", f)

    def E(w):
        return m_spectrum_entropy(gamma ** (0.5 * w), M)

    return E(f) + E(1.0) - E(1.0 - f)


def mi_mway_limit(gamma: float, f: float) -> float:
    """M -> infinity limit of mi_mway / ln M.

    The normalized plateau keeps a full record per branch pair:
    1 + Gamma^((1-f)/2) - Gamma^(f/2) - Gamma^(1/2).
    """
    _check_unit("gamma", gamma)
    _check_unit("f", f)
    return (
        1.0
        + gamma ** (0.5 * (1.0 - f))
        - gamma ** (0.5 * f)
        - gamma ** 0.5
    )


def _uniform_factor_mi(probs: np.ndarray, gamma: float, f: float) -> Nats:
    """MI with every pairwise factor equal, arbitrary branch weights.

    Uniform weights route through the closed form; otherwise the three
    small matrices [sqrt(p_a p_b) Gamma^(w/2)] are diagonalized directly.
    """
    M = probs.size
    if np.allclose(probs, 1.0 / M, atol=1e-12):
        return mi_mway(gamma, f, M)

    def E(w):
        amp = np.sqrt(probs)
        rho = np.outer(amp, amp) * gamma ** (0.5 * w)
        np.fill_diagonal(rho, probs)
        eigs = np.clip(np.linalg.eigvalsh(rho), 0.0, None)
        return float(-xlogy(eigs, eigs).sum())

    return E(f) + E(1.0) - E(1.0 - f)


def mi_interval_bounds(gamma_matrix, probs, f: float) -> tuple[Nats, Nats]:
    """Bracket the unequal-factor MI by its weak and strong surrogates.

    Returns (mi_weak, mi_strong): the mutual information recomputed with
    every pairwise factor set to the largest (weakest decoherence) and
    smallest (strongest) off-diagonal entry. The exact value lies between
    them for f < 1/2 once every factor is small; a weakest factor above
    e^-5 is flagged because the ordering is then unverified.
    """
    gamma_matrix = _check_factor_matrix(gamma_matrix)
    probs = _check_probs(probs)
    if gamma_matrix.shape[0] != probs.size:
        raise ValueError("factor matrix and probabilities disagree on M")
    _check_unit("f", f)
    M = probs.size
    off = ~np.eye(M, dtype=bool)
    gamma_weak = float(gamma_matrix[off].max())
    gamma_strong = float(gamma_matrix[off].min())
    if gamma_weak > BOUND_VALIDITY_GAMMA:
        warnings.warn(
            f"weakest pair factor {gamma_weak:.3e} exceeds e^-5; the "
            "surrogates are not guaranteed to bracket the exact value",
            stacklevel=2,
        )
    return (
        _uniform_factor_mi(probs, gamma_weak, f),
        _uniform_factor_mi(probs, gamma_strong, f),
    )
