"""Central-symmetry scoring for closed loops and the midpoint mean-value test.

A loop is centrally symmetric about c when the point reflection p -> 2c - p
maps it onto itself.  The asymmetry score reflects every vertex through a
candidate center, measures each reflected vertex's distance to the original
polyline (point-to-segment, closing segment included), takes the maximum,
and normalizes by the loop's chart diameter.  The score is zero for exact
symmetry in any affine chart, so chart coordinates are good enough to decide
centrality even though they distort lengths.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.spatial import cKDTree

from ._fastdist import max_min_dist_all, max_min_dist_candidates
from .errors import DegenerateLoop, InvalidDomain

__all__ = [
    "CentralityReport",
    "centroid",
    "asymmetry_at",
    "centrality",
    "symmetric_quotient",
    "midpoint_residual",
    "max_midpoint_residual",
]

# Below this many point-segment pairs the exact all-pairs scan is cheap
# enough; above it, candidate segments come from a nearest-vertex query.
_BRUTE_PAIR_LIMIT = 250_000

# Neighbours consulted per reflected point on the fast path.  Both incident
# segments of each neighbour vertex are checked.
_KNN = 8


@dataclass(frozen=True)
class CentralityReport:
    """Outcome of a centrality test: center, score, and the applied tolerance."""

    center: tuple[float, float]
    asymmetry: float
    tolerance: float
    central: bool


def _as_points(obj):
    pts = obj.points if hasattr(obj, "points") else np.asarray(obj, dtype=float)
    pts = np.asarray(pts, dtype=float)
    if pts.ndim != 2 or pts.shape[1] != 2 or len(pts) < 3:
        raise DegenerateLoop("need at least 3 chart points")
    return pts


def centroid(loop):
    """Arclength-weighted centroid of the closed polyline, in chart coordinates."""
    pts = _as_points(loop)
    nxt = np.roll(pts, -1, axis=0)
    seg = nxt - pts
    lengths = np.hypot(seg[:, 0], seg[:, 1])
    total = lengths.sum()
    if total == 0.0:
        raise DegenerateLoop("loop has zero total length")
    mids = 0.5 * (pts + nxt)
    c = (mids * lengths[:, None]).sum(axis=0) / total
    return float(c[0]), float(c[1])


class _LoopGeometry:
    """Per-loop precomputation shared by repeated asymmetry evaluations."""

    def __init__(self, points):
        pts = _as_points(points)
        self.pts = pts
        self.seg_a = np.ascontiguousarray(pts)
        self.seg_d = np.roll(pts, -1, axis=0) - pts
        len2 = (self.seg_d ** 2).sum(axis=1)
        if len2.sum() == 0.0:
            raise DegenerateLoop("loop has zero total length")
        self.seg_len2 = np.where(len2 > 0.0, len2, 1.0)
        self.diameter = _chart_diameter(pts)
        if self.diameter == 0.0:
            raise DegenerateLoop("loop has zero diameter")
        n = len(pts)
        self._brute = n * n <= _BRUTE_PAIR_LIMIT
        if not self._brute:
            self._tree = cKDTree(pts)
            self._k = min(_KNN, n)

    def max_reflect_distance(self, center):
        refl = 2.0 * np.asarray(center, dtype=float) - self.pts
        if self._brute:
            return float(max_min_dist_all(refl, self.seg_a, self.seg_d, self.seg_len2))
        _, idx = self._tree.query(refl, k=self._k)
        cand = np.concatenate([idx, idx - 1], axis=1) % len(self.pts)
        return float(
            max_min_dist_candidates(refl, self.seg_a, self.seg_d, self.seg_len2, cand)
        )


def _pairwise_max_dist2(a, b):
    sq_a = (a**2).sum(axis=1)
    sq_b = (b**2).sum(axis=1)
    d2 = sq_a[:, None] + sq_b[None, :] - 2.0 * (a @ b.T)
    flat = int(np.argmax(d2))
    i, j = divmod(flat, len(b))
    return float(d2[i, j]), i, j


def _chart_diameter(pts):
    """Max pairwise distance.

    Large loops use a strided coarse scan refined around the winning pair,
    which is exact whenever consecutive points advance smoothly (every
    traced loop does); small loops use the full pairwise scan.
    """
    n = len(pts)
    if n <= 700:
        d2, _, _ = _pairwise_max_dist2(pts, pts)
        return float(np.sqrt(max(d2, 0.0)))
    stride = int(np.ceil(n / 600))
    coarse = pts[::stride]
    _, ci, cj = _pairwise_max_dist2(coarse, coarse)
    half = 2 * stride + 2
    i0 = ci * stride
    j0 = cj * stride
    win_i = pts[max(i0 - half, 0) : i0 + half + 1]
    win_j = pts[max(j0 - half, 0) : j0 + half + 1]
    d2, _, _ = _pairwise_max_dist2(win_i, win_j)
    return float(np.sqrt(max(d2, 0.0)))


def asymmetry_at(loop, center):
    """Asymmetry of the loop about the given chart center.

    Maximum over reflected vertices of the distance to the original
    polyline, divided by the loop's chart diameter.
    """
    geom = _LoopGeometry(loop)
    return geom.max_reflect_distance(center) / geom.diameter


def centrality(loop, tol, free_center=False):
    """Find the best center and decide centrality at the given tolerance.

    The search seeds at the arclength-weighted centroid and refines by
    coordinate descent with step diameter/8 halved 20 times.  Traced loops
    are mirror symmetric in y, so the center's y-coordinate is pinned to 0;
    pass free_center=True for externally supplied loops to search both
    coordinates.
    """
    if not (tol > 0.0):
        raise InvalidDomain(f"tolerance must be positive, got {tol!r}")
    geom = _LoopGeometry(loop)
    cy, cz = centroid(loop)
    center = np.array([cy, cz]) if free_center else np.array([0.0, cz])
    best = geom.max_reflect_distance(center)
    dirs = [np.array([0.0, 1.0])]
    if free_center:
        dirs.append(np.array([1.0, 0.0]))
    step = geom.diameter / 8.0
    for _ in range(20):
        for d in dirs:
            for cand in (center + step * d, center - step * d):
                val = geom.max_reflect_distance(cand)
                if val < best:
                    best, center = val, cand
                    break
        step *= 0.5
    asym = best / geom.diameter
    return CentralityReport(
        center=(float(center[0]), float(center[1])),
        asymmetry=asym,
        tolerance=float(tol),
        central=bool(asym <= tol),
    )


def symmetric_quotient(f, zeta, t):
    """(f(zeta + t) - f(zeta - t)) / (2 t); equals f'(zeta) for quadratics."""
    if t == 0.0:
        raise InvalidDomain("symmetric quotient needs t != 0")
    return (f(zeta + t) - f(zeta - t)) / (2.0 * t)


def midpoint_residual(f, f_prime, zeta, t):
    """f'(zeta) minus the symmetric quotient; identically 0 iff f is quadratic."""
    return f_prime(zeta) - symmetric_quotient(f, zeta, t)


def max_midpoint_residual(f, f_prime, zetas, ts):
    """Largest |midpoint residual| over the (zeta, t) grid."""
    worst = 0.0
    for zeta in zetas:
        for t in ts:
            worst = max(worst, abs(midpoint_residual(f, f_prime, zeta, t)))
    return worst
