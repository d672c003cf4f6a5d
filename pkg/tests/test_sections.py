"""Cutting planes, loop extent, tracing, embedding, and the slope bound."""

import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

import revquad as rq
from revquad import (
    InvalidDomain,
    LoopEscapesDomain,
    NonSimpleSection,
    OutOfDomain,
    Plane,
    ZeroSlope,
)

SQ2 = 1.0 / math.sqrt(2.0)


class TestPlane:
    def test_fields(self):
        pl = Plane(0.5, -0.2)
        assert pl.m == 0.5 and pl.beta == -0.2

    def test_rejects_negative_slope(self):
        with pytest.raises(InvalidDomain):
            Plane(-0.1, 0.0)

    def test_rejects_non_finite(self):
        with pytest.raises(InvalidDomain):
            Plane(float("nan"), 0.0)
        with pytest.raises(InvalidDomain):
            Plane(1.0, float("inf"))


class TestSectionGap:
    def test_sphere_hand_values(self, sphere):
        pl = Plane(1.0, 0.0)
        assert rq.section_gap(sphere, pl, 0.0) == 1.0
        assert rq.section_gap(sphere, pl, 0.5) == pytest.approx(0.5, abs=1e-15)
        assert rq.section_gap(sphere, pl, SQ2) == pytest.approx(0.0, abs=1e-15)

    def test_zero_slope_rejected(self, sphere):
        with pytest.raises(ZeroSlope):
            rq.section_gap(sphere, Plane(0.0, 0.0), 0.1)

    def test_vectorized(self, sphere):
        pl = Plane(1.0, 0.0)
        zs = np.array([0.0, 0.3, 0.5])
        out = rq.section_gap(sphere, pl, zs)
        assert np.allclose(out, 1.0 - 2.0 * zs**2)


class TestSectionExtent:
    def test_cylinder_closed_form(self, cylinder):
        lo, hi = rq.section_extent(cylinder, Plane(0.5, 0.0))
        assert lo == pytest.approx(-0.5, abs=1e-12)
        assert hi == pytest.approx(0.5, abs=1e-12)

    @given(
        m=st.floats(0.05, 3.0),
        beta=st.floats(-5.0, 5.0),
    )
    def test_cylinder_any_plane(self, cylinder, m, beta):
        # roots of r^2 - ((z - beta)/m)^2 are beta -+ m r
        lo, hi = rq.section_extent(cylinder, Plane(m, beta))
        assert abs(lo - (beta - m)) <= 1e-11
        assert abs(hi - (beta + m)) <= 1e-11

    def test_sphere_diagonal(self, sphere):
        lo, hi = rq.section_extent(sphere, Plane(1.0, 0.0))
        assert lo == pytest.approx(-SQ2, abs=1e-12)
        assert hi == pytest.approx(SQ2, abs=1e-12)

    def test_steep_offcenter_sphere_plane_still_closes(self, sphere):
        # the plane z = 4x + 0.9 passes within distance 0.218 of the origin,
        # so it cuts the unit sphere in a closed loop; the extent roots are
        # the roots of the quadratic 17 z^2 - 1.8 z - 15.19
        lo, hi = rq.section_extent(sphere, Plane(4.0, 0.9))
        disc = math.sqrt(1.8**2 + 4.0 * 17.0 * 15.19)
        assert lo == pytest.approx((1.8 - disc) / 34.0, abs=1e-10)
        assert hi == pytest.approx((1.8 + disc) / 34.0, abs=1e-10)

    def test_escape_near_cylinder_edge(self, cylinder):
        # z = x + 9.8 would need to reach z = 10.8 to close
        with pytest.raises(LoopEscapesDomain):
            rq.section_extent(cylinder, Plane(1.0, 9.8))

    def test_escape_on_hyperboloid(self, hyperboloid):
        # slope above the asymptotic cone: the gap 1 + z^2 - (z/m)^2 > 0 always
        with pytest.raises(LoopEscapesDomain):
            rq.section_extent(hyperboloid, Plane(1.5, 0.0))

    def test_intercept_outside_domain(self, sphere):
        with pytest.raises(OutOfDomain):
            rq.section_extent(sphere, Plane(1.0, 1.5))

    def test_zero_slope(self, sphere):
        with pytest.raises(ZeroSlope):
            rq.section_extent(sphere, Plane(0.0, 0.0))


class TestTraceSection:
    def test_point_count_and_order(self, sphere):
        loop = rq.trace_section(sphere, Plane(1.0, 0.0), 64)
        pts = loop.points
        assert len(pts) == 2 * 64 - 2
        # starts at (0, z_lo), reaches (0, z_hi) at index n-1
        assert pts[0, 0] == 0.0 and pts[0, 1] == loop.z_lo
        assert pts[63, 0] == 0.0 and pts[63, 1] == loop.z_hi
        # upper branch first, then lower branch back
        assert np.all(pts[:64, 0] >= 0.0)
        assert np.all(pts[64:, 0] <= 0.0)
        assert np.all(np.diff(pts[:64, 1]) > 0.0)
        assert np.all(np.diff(pts[64:, 1]) < 0.0)

    def test_sphere_extent_and_peak(self, sphere):
        loop = rq.trace_section(sphere, Plane(1.0, 0.0), 65)
        assert loop.z_lo == pytest.approx(-SQ2, abs=1e-12)
        assert loop.z_hi == pytest.approx(SQ2, abs=1e-12)
        # odd n puts a node at the midpoint z = 0 where y peaks at 1
        assert np.max(loop.points[:, 0]) == pytest.approx(1.0, abs=1e-12)

    def test_mirror_symmetry_exact(self, paraboloid):
        loop = rq.trace_section(paraboloid, Plane(0.3, 0.1), 64)
        pts = loop.points
        upper = pts[:64]
        lower = pts[64:]
        # the lower branch is the exact mirror image of the upper interior
        mirrored = np.column_stack([-upper[1:-1, 0], upper[1:-1, 1]])
        assert np.array_equal(lower[::-1], mirrored)

    def test_gap_consistency(self, hyperboloid):
        pl = Plane(0.4, 0.3)
        loop = rq.trace_section(hyperboloid, pl, 128)
        gaps = rq.section_gap(hyperboloid, pl, loop.points[:, 1])
        resid = np.abs(gaps - loop.points[:, 0] ** 2)
        assert np.max(resid) <= 1e-12 * max(1.0, hyperboloid.eval(pl.beta))

    def test_z_extent_brackets_beta(self, paraboloid):
        loop = rq.trace_section(paraboloid, Plane(0.2, 0.4), 32)
        assert loop.z_lo < 0.4 < loop.z_hi

    def test_horizontal_circle(self, cylinder):
        loop = rq.trace_section(cylinder, Plane(0.0, 0.3), 32)
        assert len(loop.points) == 32
        assert loop.z_lo == loop.z_hi == 0.3
        radii = np.hypot(loop.points[:, 0], loop.points[:, 1])
        assert np.allclose(radii, 1.0, rtol=0, atol=1e-12)

    def test_minimum_sample_count(self, sphere):
        with pytest.raises(InvalidDomain):
            rq.trace_section(sphere, Plane(1.0, 0.0), 15)

    def test_non_simple_cut_detected(self):
        # a profile with a deep dip between the extent roots: the outward
        # walk finds the far root, but the gap goes negative in between
        class DippedProfile:
            q = 10.0

            def eval(self, z):
                arr = np.abs(np.asarray(z, dtype=float))
                val = np.where((arr >= 0.63) & (arr <= 0.68), 0.1, 1.0)
                return float(val) if np.ndim(z) == 0 else val

        with pytest.raises(NonSimpleSection):
            rq.trace_section(DippedProfile(), Plane(1.0, 0.0), 64)


class TestEmbed3d:
    def test_sphere_points_on_surface(self, sphere):
        loop = rq.trace_section(sphere, Plane(1.0, 0.0), 64)
        xyz = rq.embed_3d(loop)
        # plane equation is exact
        assert np.max(np.abs(xyz[:, 2] - (1.0 * xyz[:, 0] + 0.0))) <= 1e-12
        # surface equation to relative precision
        lhs = xyz[:, 0] ** 2 + xyz[:, 1] ** 2
        rhs = 1.0 - xyz[:, 2] ** 2
        assert np.max(np.abs(lhs - rhs)) <= 1e-10 * max(1.0, np.max(np.abs(rhs)))

    def test_chart_lift_example(self, sphere):
        loop = rq.trace_section(sphere, Plane(1.0, 0.0), 65)
        xyz = rq.embed_3d(loop)
        top = xyz[np.argmax(xyz[:, 2])]
        assert top[0] == pytest.approx(SQ2, abs=1e-12)
        assert top[1] == pytest.approx(0.0, abs=1e-12)
        assert top[2] == pytest.approx(SQ2, abs=1e-12)

    def test_cylinder_unit_offset(self, cylinder):
        loop = rq.trace_section(cylinder, Plane(0.7, 0.2), 64)
        xyz = rq.embed_3d(loop)
        # the chart point (y=0, z=beta+m) lifts to x=1 on a radius-1 cylinder
        i = np.argmax(xyz[:, 2])
        assert xyz[i, 0] == pytest.approx(1.0, abs=1e-10)
        assert xyz[i, 2] == pytest.approx(0.9, abs=1e-10)

    def test_horizontal_embedding(self, cylinder):
        loop = rq.trace_section(cylinder, Plane(0.0, 0.4), 32)
        xyz = rq.embed_3d(loop)
        assert np.all(xyz[:, 2] == 0.4)
        assert np.allclose(np.hypot(xyz[:, 0], xyz[:, 1]), 1.0, atol=1e-12)


class TestSlopeBound:
    def test_cylinder_values(self):
        c1 = rq.parse_profile("cylinder:1,10")
        c2 = rq.parse_profile("cylinder:2,10")
        assert rq.slope_bound(c1, 1.0) == pytest.approx(0.5, abs=1e-14)
        assert rq.slope_bound(c2, 1.0) == pytest.approx(0.25, abs=1e-14)

    def test_sphere_value(self, sphere):
        assert rq.slope_bound(sphere, 0.4) == pytest.approx(0.2, abs=1e-14)

    def test_delta_domain(self, sphere):
        with pytest.raises(InvalidDomain):
            rq.slope_bound(sphere, 0.0)
        with pytest.raises(InvalidDomain):
            rq.slope_bound(sphere, 1.0)

    @pytest.mark.parametrize("preset", ["sphere", "cylinder:1,10", "hyperboloid:1,2", "paraboloid:2,1"])
    def test_slab_and_extent_guarantees(self, preset):
        # planes under the bound cut loops inside the slab with the
        # guaranteed minimum extent
        p = rq.parse_profile(preset)
        delta = 0.1 * p.q
        mu = rq.slope_bound(p, delta)
        phi = rq.infimum_radius(p, delta)
        for frac in (0.3, 0.6, 0.95):
            m = frac * mu
            for beta in (-(p.q - 2 * delta) * 0.9, 0.0, (p.q - 2 * delta) * 0.9):
                lo, hi = rq.section_extent(p, Plane(m, beta))
                assert abs(lo - beta) < delta
                assert abs(hi - beta) < delta
                assert hi - lo >= 2.0 * m * phi - 1e-9 * p.q
