"""Shared fixtures and independent oracle implementations.

The oracles here deliberately avoid the library's geometry code paths
(KD-tree candidate pruning, compiled kernels, normal equations): they are
plain quadratic-cost numpy so that fast-path results can be checked against
a second, independently written route.
"""

import numpy as np
import pytest
from hypothesis import HealthCheck, settings

import revquad as rq

settings.register_profile(
    "suite",
    derandomize=True,
    max_examples=25,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("suite")


def oracle_asymmetry(points, center):
    """Brute-force asymmetry: reflect every vertex, measure the worst
    distance to the closed polyline over all segments, divide by the
    brute-force diameter."""
    pts = np.asarray(points, dtype=float)
    ctr = np.asarray(center, dtype=float)
    refl = 2.0 * ctr - pts
    a = pts
    d = np.roll(pts, -1, axis=0) - pts
    len2 = np.einsum("ij,ij->i", d, d)
    safe = np.where(len2 == 0.0, 1.0, len2)
    worst = 0.0
    for r in refl:
        ap = r - a
        t = np.clip(np.einsum("ij,ij->i", ap, d) / safe, 0.0, 1.0)
        foot = a + t[:, None] * d
        gap = r - foot
        dist = np.sqrt(np.min(np.einsum("ij,ij->i", gap, gap)))
        worst = max(worst, float(dist))
    return worst / oracle_diameter(pts)


def oracle_diameter(points):
    pts = np.asarray(points, dtype=float)
    diff = pts[:, None, :] - pts[None, :, :]
    return float(np.sqrt(np.max(np.einsum("ijk,ijk->ij", diff, diff))))


def oracle_quadratic_fit(z, v):
    """Independent quadratic least squares via numpy's polyfit."""
    a, b, c = np.polyfit(np.asarray(z, float), np.asarray(v, float), 2)
    return float(a), float(b), float(c)


def synthetic_loop(points, m=1.0, beta=0.0):
    """Wrap a raw point array in a SectionLoop for symmetry-level tests."""
    pts = np.asarray(points, dtype=float)
    return rq.SectionLoop(
        plane=rq.Plane(m, beta),
        points=pts,
        z_lo=float(pts[:, 1].min()),
        z_hi=float(pts[:, 1].max()),
    )


@pytest.fixture(scope="session")
def sphere():
    return rq.parse_profile("sphere")


@pytest.fixture(scope="session")
def cylinder():
    return rq.parse_profile("cylinder:1,10")


@pytest.fixture(scope="session")
def hyperboloid():
    return rq.parse_profile("hyperboloid:1,2")


@pytest.fixture(scope="session")
def paraboloid():
    return rq.parse_profile("paraboloid:2,1")


@pytest.fixture(scope="session")
def cubic():
    """F(z) = 2 + z^3 on (-1, 1): the canonical non-quadric."""
    return rq.parse_profile("poly:2,0,0,1;1")


@pytest.fixture(scope="session")
def quartic():
    """F(z) = 1 + z^2 + z^4 on (-1, 1): even but non-quadric."""
    return rq.parse_profile("poly:1,0,1,0,1;1")
