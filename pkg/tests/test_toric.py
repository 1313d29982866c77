import random
from fractions import Fraction as F

import pytest

from ehrkit.errors import NotFano
from ehrkit.kernel import affine_image, hull
from ehrkit.randgen import random_unimodular_map
from ehrkit.toric import (
    anticanonical_degree,
    is_smooth,
    ke_criterion,
    toric_report,
)


@pytest.fixture(scope="module")
def blowup_triangle():
    """Fano polytope of the blow-up of the plane at one point."""
    return hull([(1, 0), (0, 1), (-1, -1), (0, -1)])


class TestDegree:
    def test_projective_plane(self, p2_triangle):
        assert anticanonical_degree(p2_triangle) == 9

    def test_quadric_surface(self, cross_polytope):
        assert anticanonical_degree(cross_polytope) == 8

    def test_non_fano_rejected(self, triple_simplex):
        with pytest.raises(NotFano):
            anticanonical_degree(triple_simplex)

    def test_unimodular_invariance(self, p2_triangle, cross_polytope):
        rng = random.Random(89)
        for q in (p2_triangle, cross_polytope):
            deg = anticanonical_degree(q)
            for _ in range(10):
                u = random_unimodular_map(rng, 2, ops=6, shift=0)
                image = affine_image(q, u.as_rational())
                assert anticanonical_degree(image) == deg


class TestKECriterion:
    def test_projective_plane(self, p2_triangle):
        assert ke_criterion(p2_triangle)

    def test_cross_polytope(self, cross_polytope):
        assert ke_criterion(cross_polytope)

    def test_blowup_fails(self, blowup_triangle):
        assert not ke_criterion(blowup_triangle)


class TestToricReport:
    def test_projective_plane(self, p2_triangle):
        rep = toric_report(p2_triangle)
        assert rep.degree == 9
        assert rep.r_value == 1
        assert rep.ke_exists
        assert rep.weighted_bound == 9
        assert rep.weighted_status == "equality"
        assert rep.plain_status == "equality"
        assert rep.is_projective_space
        assert rep.smooth
        assert rep.witness is not None

    def test_quadric(self, cross_polytope):
        rep = toric_report(cross_polytope)
        assert rep.degree == 8
        assert rep.r_value == 1
        assert rep.weighted_bound == 9
        assert rep.weighted_status == "strict"
        assert not rep.is_projective_space

    def test_blowup(self, blowup_triangle):
        rep = toric_report(blowup_triangle)
        assert rep.degree == 8
        assert not rep.ke_exists
        assert rep.r_value == F(6, 7)
        assert rep.r_value < 1
        assert rep.weighted_bound == F(49, 4)
        assert rep.weighted_status == "strict"
        assert rep.plain_status == "not-applicable"
        assert not rep.is_projective_space

    def test_r_one_iff_ke(self, p2_triangle, cross_polytope, blowup_triangle):
        for q in (p2_triangle, cross_polytope, blowup_triangle):
            rep = toric_report(q)
            assert (rep.r_value == 1) == rep.ke_exists

    def test_degree_integral_for_reflexive(self):
        from ehrkit.corpus import enumerate_fano_2d

        for q in enumerate_fano_2d(3)[:6]:
            rep = toric_report(q)
            assert rep.degree.denominator == 1
            assert rep.degree <= rep.weighted_bound


class TestSmoothness:
    def test_smooth_examples(self, p2_triangle, cross_polytope, blowup_triangle):
        assert is_smooth(p2_triangle)
        assert is_smooth(cross_polytope)
        assert is_smooth(blowup_triangle)

    def test_singular_fano(self):
        q = hull([(1, 0), (-1, 2), (-1, -2)])
        assert not is_smooth(q)
        rep = toric_report(q)
        assert rep.weighted_status != "violation"
