"""Sky regions and quadrature over the unit sphere.

A region is the patch of sky occupied by the source, seen from the object.
The separation axis of the superposition defines the global z axis; a
tilted disk region is generated in its own polar frame and rotated into
place, which keeps the disk boundary a coordinate line of the quadrature
grid.

Quadrature is a product rule: Gauss-Legendre in cos(theta), uniform
(trapezoid on a periodic interval) in phi. Integrands met here are smooth
once the cos(theta) domain is split at region boundaries, so the rule
converges spectrally.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

__all__ = [
    "Direction",
    "SkyRegion",
    "solid_angle",
    "integrate_sphere",
    "g2_weight",
    "region_nodes",
    "complement_nodes",
    "sphere_nodes",
    "angular_moments",
    "load_indicator_grid",
]

FULL_SPHERE = 4.0 * math.pi

_UNIT_TOL = 1e-12


@dataclass(frozen=True)
class Direction:
    """A point on the unit sphere, stored as (cos(theta), phi).

    theta and phi are relative to the declared polar axis (the separation
    axis unless stated otherwise).
    """

    cos_theta: float
    phi: float = 0.0

    def __post_init__(self):
        if not -1.0 <= self.cos_theta <= 1.0:
            raise ValueError(f"cos_theta out of range: {self.cos_theta}")

    @classmethod
    def from_vector(cls, v) -> "Direction":
        v = np.asarray(v, dtype=float)
        norm = float(np.linalg.norm(v))
        if abs(norm - 1.0) > 1e-6:
            raise ValueError(f"direction vector is not unit length: |v| = {norm}")
        v = v / norm
        return cls(cos_theta=float(v[2]), phi=float(math.atan2(v[1], v[0])))

    @property
    def vector(self) -> np.ndarray:
        s = math.sqrt(max(0.0, 1.0 - self.cos_theta**2))
        v = np.array([
            s * math.cos(self.phi),
            s * math.sin(self.phi),
            self.cos_theta,
        ])
        # The constructor range checks make this a soft invariant, but the
        # trig roundtrip is worth pinning down.
        assert abs(np.dot(v, v) - 1.0) < _UNIT_TOL
        return v


ZENITH = Direction(cos_theta=1.0, phi=0.0)


def _rotation_about_y(angle: float) -> np.ndarray:
    c, s = math.cos(angle), math.sin(angle)
    return np.array([[c, 0.0, s], [0.0, 1.0, 0.0], [-s, 0.0, c]])


@dataclass(frozen=True)
class SkyRegion:
    """Illumination patch on the sky.

    kind is one of "point", "disk", "isotropic", "custom". Disks are
    polar caps theta <= theta0 about an axis tilted by chi from the
    separation axis. Custom regions carry a 0/1 indicator sampled on a
    rectangular (cos_theta, phi) grid of cell centers; their boundary is
    resolved only to first order in the grid spacing.
    """

    kind: str
    theta0: float = 0.0
    chi: float = 0.0
    direction: Direction | None = None
    grid_u: np.ndarray | None = field(default=None, repr=False)
    grid_phi: np.ndarray | None = field(default=None, repr=False)
    grid_mask: np.ndarray | None = field(default=None, repr=False)

    def __post_init__(self):
        if self.kind not in ("point", "disk", "isotropic", "custom"):
            raise ValueError(f"unknown region kind: {self.kind!r}")
        if self.kind == "disk":
            if not 0.0 <= self.theta0 <= math.pi:
                raise ValueError(f"theta0 must be in [0, pi], got {self.theta0}")
            if not 0.0 <= self.chi <= math.pi:
                raise ValueError(f"chi must be in [0, pi], got {self.chi}")

    @classmethod
    def point(cls, direction: Direction = ZENITH) -> "SkyRegion":
        return cls(kind="point", direction=direction)

    @classmethod
    def disk(cls, theta0: float, chi: float = 0.0) -> "SkyRegion":
        return cls(kind="disk", theta0=theta0, chi=chi)

    @classmethod
    def isotropic(cls) -> "SkyRegion":
        return cls(kind="isotropic")

    @classmethod
    def custom(cls, grid_u, grid_phi, mask) -> "SkyRegion":
        grid_u = np.asarray(grid_u, dtype=float)
        grid_phi = np.asarray(grid_phi, dtype=float)
        mask = np.asarray(mask)
        if mask.shape != (grid_u.size, grid_phi.size):
            raise ValueError(
                f"indicator shape {mask.shape} does not match grid "
                f"({grid_u.size} x {grid_phi.size})"
            )
        return cls(kind="custom", grid_u=grid_u, grid_phi=grid_phi,
                   grid_mask=mask.astype(bool))

    @property
    def solid_angle_sr(self) -> float:
        return solid_angle(self)


def solid_angle(region: SkyRegion) -> float:
    """Solid angle of the region in steradians."""
    if region.kind == "point":
        return 0.0
    if region.kind == "isotropic":
        return FULL_SPHERE
    if region.kind == "disk":
        return 2.0 * math.pi * (1.0 - math.cos(region.theta0))
    # Custom: Riemann sum of the indicator over its own grid cells.
    du, dphi = _custom_cell_size(region)
    return float(region.grid_mask.sum()) * du * dphi


def _custom_cell_size(region: SkyRegion) -> tuple[float, float]:
    u, phi = region.grid_u, region.grid_phi
    du = (u[-1] - u[0]) / (u.size - 1) if u.size > 1 else 2.0
    dphi = (phi[-1] - phi[0]) / (phi.size - 1) if phi.size > 1 else 2.0 * math.pi
    return du, dphi


def _panel(ulo: float, uhi: float, order: int, nphi: int):
    """Product nodes on a cos(theta) panel: (points (N,3), weights (N,))."""
    x, w = np.polynomial.legendre.leggauss(order)
    u = 0.5 * (uhi - ulo) * x + 0.5 * (uhi + ulo)
    wu = 0.5 * (uhi - ulo) * w
    phi = (np.arange(nphi) + 0.5) * (2.0 * math.pi / nphi)
    wphi = 2.0 * math.pi / nphi
    uu, pp = np.meshgrid(u, phi, indexing="ij")
    ww = np.repeat(wu, nphi) * wphi
    s = np.sqrt(np.clip(1.0 - uu**2, 0.0, None))
    pts = np.stack(
        [s * np.cos(pp), s * np.sin(pp), uu], axis=-1
    ).reshape(-1, 3)
    return pts, ww


def integrate_sphere(f, order: int = 64, split_cos=()) -> float:
    """Integrate f(Direction) over the sphere.

    split_cos lists cos(theta) values at which the domain is cut into
    panels, so integrands that kink or jump at a parallel keep spectral
    accuracy. The phi rule uses 2*order uniform points, exact for
    trigonometric polynomials up to that degree.
    """
    if order < 2:
        raise ValueError(f"quadrature order must be >= 2, got {order}")
    edges = sorted({-1.0, 1.0, *(float(s) for s in split_cos)})
    if edges[0] < -1.0 or edges[-1] > 1.0:
        raise ValueError("split points must lie inside [-1, 1]")
    nphi = 2 * order
    total = 0.0
    for ulo, uhi in zip(edges[:-1], edges[1:]):
        if uhi - ulo <= 0:
            continue
        pts, ww = _panel(ulo, uhi, order, nphi)
        vals = np.array([
            f(Direction(cos_theta=float(p[2]),
                        phi=float(math.atan2(p[1], p[0]))))
            for p in pts
        ])
        total += float(np.sum(ww * vals))
    return total


def g2_weight(n_hat, m_hat, dx_hat) -> float:
    """Angular weight of the squared off-diagonal scattering overlap.

    (1 + cos^2 theta_nm) (cos theta_dn - cos theta_dm)^2, where theta_nm
    is the angle between the two photon directions and theta_dn, theta_dm
    their angles to the separation axis. Symmetric under n <-> m and zero
    exactly when the two projections onto the separation axis coincide.
    """
    n = n_hat.vector if isinstance(n_hat, Direction) else np.asarray(n_hat, float)
    m = m_hat.vector if isinstance(m_hat, Direction) else np.asarray(m_hat, float)
    d = dx_hat.vector if isinstance(dx_hat, Direction) else np.asarray(dx_hat, float)
    cnm = float(np.dot(n, m))
    an = float(np.dot(n, d))
    am = float(np.dot(m, d))
    return (1.0 + cnm * cnm) * (an - am) ** 2


def _disk_nodes(theta0: float, chi: float, order: int, cap: bool):
    """Nodes on a polar cap (cap=True) or its complement, rotated by chi."""
    u0 = math.cos(theta0)
    nphi = 2 * order
    if cap:
        pts, ww = _panel(u0, 1.0, order, nphi)
    else:
        pts, ww = _panel(-1.0, u0, order, nphi)
    if chi != 0.0:
        pts = pts @ _rotation_about_y(chi).T
    return pts, ww


def _custom_nodes(region: SkyRegion, inside: bool):
    du, dphi = _custom_cell_size(region)
    uu, pp = np.meshgrid(region.grid_u, region.grid_phi, indexing="ij")
    mask = region.grid_mask if inside else ~region.grid_mask
    uu, pp = uu[mask], pp[mask]
    s = np.sqrt(np.clip(1.0 - uu**2, 0.0, None))
    pts = np.stack([s * np.cos(pp), s * np.sin(pp), uu], axis=-1)
    ww = np.full(pts.shape[0], du * dphi)
    return pts, ww


def region_nodes(region: SkyRegion, order: int = 64):
    """Quadrature nodes and weights covering the region itself."""
    if region.kind == "point":
        raise ValueError("a point region has zero measure; integrate nothing")
    if region.kind == "isotropic":
        return _panel(-1.0, 1.0, order, 2 * order)
    if region.kind == "disk":
        return _disk_nodes(region.theta0, region.chi, order, cap=True)
    return _custom_nodes(region, inside=True)


def complement_nodes(region: SkyRegion, order: int = 64):
    """Quadrature nodes and weights covering the sky minus the region."""
    if region.kind == "point":
        return _panel(-1.0, 1.0, order, 2 * order)
    if region.kind == "isotropic":
        pts = np.empty((0, 3))
        return pts, np.empty(0)
    if region.kind == "disk":
        return _disk_nodes(region.theta0, region.chi, order, cap=False)
    return _custom_nodes(region, inside=False)


def sphere_nodes(region: SkyRegion, order: int = 64):
    """Full-sphere nodes using the same panel split as the region.

    Sharing panels with region_nodes keeps differences of the two
    integrals free of inconsistent quadrature error.
    """
    if region.kind in ("point", "isotropic"):
        return _panel(-1.0, 1.0, order, 2 * order)
    pa, wa = region_nodes(region, order)
    pb, wb = complement_nodes(region, order)
    return np.vstack([pa, pb]), np.concatenate([wa, wb])


@dataclass(frozen=True)
class AngularMoments:
    """Moments of a weighted node set against a reference axis.

    s[k] holds the scalar integrals of a^k and t[k] the 3x3 tensor
    integrals of a^k n_i n_j, where a = n . axis, for k = 0, 1, 2. These
    six arrays are all that pair integrals of the g2 weight need, which
    collapses the naive N^2 double sum to O(N) work.
    """

    s: np.ndarray   # shape (3,)
    t: np.ndarray   # shape (3, 3, 3)


def angular_moments(points: np.ndarray, weights: np.ndarray,
                    axis=None) -> AngularMoments:
    if axis is None:
        a = points[:, 2]
    else:
        av = axis.vector if isinstance(axis, Direction) else np.asarray(axis, float)
        a = points @ av
    s = np.empty(3)
    t = np.empty((3, 3, 3))
    outer = points[:, :, None] * points[:, None, :]
    for k in range(3):
        wk = weights * a**k
        s[k] = np.sum(wk)
        t[k] = np.einsum("n,nij->ij", wk, outer)
    return AngularMoments(s=s, t=t)


def load_indicator_grid(path) -> SkyRegion:
    """Read a custom region from a plain-text indicator file.

    Expected layout: a header line "# rows cols" followed by rows*cols
    lines "cos_theta phi value" with value 0 or 1, sampled at the cell
    centers of a rectangular grid in row-major order.
    """
    with open(path) as fh:
        header = fh.readline().split()
        if len(header) != 3 or header[0] != "#":
            raise ValueError(f"{path}: expected header '# rows cols'")
        rows, cols = int(header[1]), int(header[2])
        data = np.loadtxt(fh)
    if data.shape != (rows * cols, 3):
        raise ValueError(
            f"{path}: expected {rows * cols} grid rows, found {data.shape[0]}"
        )
    u = data[:, 0].reshape(rows, cols)
    phi = data[:, 1].reshape(rows, cols)
    val = data[:, 2].reshape(rows, cols)
    if not (np.all(np.isclose(u, u[:, :1])) and np.all(np.isclose(phi, phi[:1, :]))):
        raise ValueError(f"{path}: grid is not rectangular")
    if not np.all((val == 0) | (val == 1)):
        raise ValueError(f"{path}: indicator values must be 0 or 1")
    return SkyRegion.custom(u[:, 0], phi[0, :], val)
