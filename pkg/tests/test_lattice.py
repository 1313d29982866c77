import random
from fractions import Fraction as F

import pytest

from ehrkit.errors import (
    DimensionUnsupported,
    NotLatticePolytope,
    OriginNotInterior,
)
from ehrkit.kernel import (
    VPolytope,
    affine_image,
    cube,
    hull,
    standard_simplex,
    v_to_h,
)
from ehrkit.lattice import (
    are_equivalent,
    dual_polytope,
    facet_lattice_data,
    is_fano,
    is_multiple_of_unimodular_simplex,
    is_reflexive,
    lattice_points,
    normal_form,
    root_symmetry_check,
)
from ehrkit.randgen import random_polytope, random_unimodular_map

from oracles import polygon_lattice_points


class TestLatticePoints:
    def test_counterexample_interior(self, counterexample_body):
        pts = lattice_points(v_to_h(counterexample_body), strict=True)
        assert pts == ((0, 0),)

    def test_counterexample_dual_points(self, counterexample_body):
        dual = dual_polytope(counterexample_body)
        assert lattice_points(v_to_h(dual)) == ((-1, 2), (0, 0), (1, -2))

    def test_triple_simplex_count(self, triple_simplex):
        # binomial(3+2, 2) = 10
        assert len(lattice_points(v_to_h(triple_simplex))) == 10

    def test_against_box_scan_oracle(self):
        rng = random.Random(13)
        for _ in range(10):
            p = random_polytope(rng, 2)
            got = lattice_points(v_to_h(p))
            assert list(got) == polygon_lattice_points(p, strict=False)
            got_strict = lattice_points(v_to_h(p), strict=True)
            assert list(got_strict) == polygon_lattice_points(p, strict=True)

    def test_unimodular_invariance_of_count(self, triple_simplex):
        rng = random.Random(17)
        pts = lattice_points(v_to_h(triple_simplex))
        for _ in range(10):
            u = random_unimodular_map(rng, 2, ops=6, shift=2)
            image = affine_image(triple_simplex, u.as_rational())
            image_pts = lattice_points(v_to_h(image))
            assert len(image_pts) == len(pts)
            assert sorted(tuple(int(c) for c in u.apply(x)) for x in pts) == \
                sorted(image_pts)


class TestDual:
    def test_fano_triangle(self, p2_triangle, p2_dual):
        assert dual_polytope(p2_triangle) == p2_dual

    def test_counterexample_dual(self, counterexample_body):
        dual = dual_polytope(counterexample_body)
        assert dual == hull([(1, -2), (-1, 2), (F(2, 3), 0), (-F(2, 3), 0)])

    def test_cross_polytope_dual_is_cube(self, cross_polytope, square2):
        assert dual_polytope(cross_polytope) == square2

    def test_involution(self, p2_triangle, cross_polytope, square2):
        for q in (p2_triangle, cross_polytope, square2):
            assert dual_polytope(dual_polytope(q)) == q

    def test_origin_must_be_interior(self, triple_simplex):
        with pytest.raises(OriginNotInterior):
            dual_polytope(triple_simplex)


class TestPredicates:
    def test_fano_triangle_is_fano(self, p2_triangle):
        assert is_fano(p2_triangle)

    def test_doubled_triangle_not_fano(self):
        q = hull([(2, 0), (0, 2), (-2, -2)])
        assert not is_fano(q)

    def test_simplex_not_fano(self):
        assert not is_fano(standard_simplex(2))

    def test_reflexive_examples(self, p2_dual, square2):
        assert is_reflexive(p2_dual)
        assert is_reflexive(cube(3))
        assert is_reflexive(square2)

    def test_reflexive_requires_lattice(self, counterexample_body):
        with pytest.raises(NotLatticePolytope):
            is_reflexive(counterexample_body)

    def test_reflexive_requires_origin(self, triple_simplex):
        with pytest.raises(OriginNotInterior):
            is_reflexive(triple_simplex)

    def test_reflexivity_matches_dual_integrality(self, p2_triangle):
        q = hull([(1, 0), (0, 1), (-1, -1), (0, -1)])
        for poly in (p2_triangle, q, cube(2)):
            assert is_reflexive(poly) == dual_polytope(poly).is_lattice()

    def test_reflexivity_is_symmetric_under_duality(self):
        from ehrkit.corpus import enumerate_fano_2d

        for q in enumerate_fano_2d(3):
            if is_reflexive(q):
                assert is_reflexive(dual_polytope(q))


class TestFacetLatticeData:
    def test_square_edges(self, square2):
        data = facet_lattice_data(square2)
        assert data.all_interior_points() == ((-1, 0), (0, -1), (0, 1), (1, 0))
        for f in data.facets:
            assert f.lattice_distance == 1
            assert len(f.interior_points) == 1

    def test_shifted_triple_simplex(self, p2_dual):
        data = facet_lattice_data(p2_dual)
        by_normal = {f.normal: f.interior_points for f in data.facets}
        assert by_normal[(0, -1)] == ((0, -1), (1, -1))

    def test_fano_triangle_has_no_facet_interior_points(self, p2_triangle):
        data = facet_lattice_data(p2_triangle)
        assert data.all_interior_points() == ()

    def test_relative_interiority_is_strict(self, p2_dual):
        hp = v_to_h(p2_dual)
        data = facet_lattice_data(p2_dual)
        for f, (a, c) in zip(data.facets, hp.facets):
            for x in f.interior_points:
                assert sum(u * w for u, w in zip(a, x)) == c
                strict = [sum(u * w for u, w in zip(a2, x)) < c2
                          for a2, c2 in hp.facets if (a2, c2) != (a, c)]
                assert all(strict)


class TestRootSymmetry:
    def test_square_holds(self, square2):
        rep = root_symmetry_check(square2)
        assert rep.status == "equality"
        assert rep.value("roots") == ((-1, 0), (0, -1), (0, 1), (1, 0))

    def test_shifted_triple_simplex_holds(self, p2_dual):
        rep = root_symmetry_check(p2_dual)
        assert rep.status == "equality"
        roots = set(rep.value("roots"))
        assert (0, -1) in roots and (0, 1) in roots

    def test_nonzero_barycenter_not_applicable(self):
        q = hull([(1, 0), (0, 1), (-1, -1), (0, -1)])
        assert root_symmetry_check(q).status == "not-applicable"

    def test_nonreflexive_not_applicable(self):
        q = hull([(2, 1), (-1, 1), (-1, -1), (2, -1)])
        assert root_symmetry_check(q).status == "not-applicable"


class TestNormalForm:
    def test_shear_and_shift_invariance(self, triple_simplex):
        image = VPolytope(2, tuple(
            (v[0] + v[1] + 5, v[1] - 7) for v in triple_simplex.vertices))
        assert normal_form(triple_simplex) == normal_form(image)

    def test_different_polytopes_differ(self, triple_simplex):
        even_square = VPolytope(2, ((0, 0), (2, 0), (0, 2), (2, 2)))
        assert normal_form(triple_simplex) != normal_form(even_square)

    def test_translation_invariance(self):
        for n in (2, 3):
            s = standard_simplex(n)
            assert normal_form(s) == normal_form(s.translate((3,) * n))

    def test_random_unimodular_invariance(self, p2_dual, square2):
        rng = random.Random(43)
        for base in (p2_dual, square2, standard_simplex(2, 2)):
            nf = normal_form(base)
            for _ in range(100):
                u = random_unimodular_map(rng, 2, ops=8, shift=3)
                assert normal_form(affine_image(base, u.as_rational())) == nf

    def test_dimension_cap(self):
        with pytest.raises(DimensionUnsupported):
            normal_form(cube(5))

    def test_requires_lattice(self, counterexample_body):
        with pytest.raises(NotLatticePolytope):
            normal_form(counterexample_body)

    def test_three_dimensional_invariance(self):
        rng = random.Random(47)
        base = cube(3)
        nf = normal_form(base)
        for _ in range(20):
            u = random_unimodular_map(rng, 3, ops=5, shift=2)
            assert normal_form(affine_image(base, u.as_rational())) == nf


class TestEquivalence:
    def test_witness_for_shifted_simplex(self, p2_dual, triple_simplex):
        f = are_equivalent(p2_dual, triple_simplex)
        assert f is not None
        image = VPolytope(2, tuple(f.apply(v) for v in p2_dual.vertices))
        assert image == triple_simplex

    def test_identity_on_equal_input(self, triple_simplex):
        f = are_equivalent(triple_simplex, triple_simplex)
        assert f.matrix == ((1, 0), (0, 1))
        assert f.translation == (0, 0)

    def test_inequivalent_is_none(self, triple_simplex):
        even_square = VPolytope(2, ((0, 0), (2, 0), (0, 2), (2, 2)))
        assert are_equivalent(triple_simplex, even_square) is None

    def test_symmetry_of_witness(self, p2_dual, triple_simplex):
        f = are_equivalent(p2_dual, triple_simplex)
        g = are_equivalent(triple_simplex, p2_dual)
        assert g is not None
        for v in triple_simplex.vertices:
            assert g.apply(v) in p2_dual.vertices
        inv = f.inverse()
        assert inv.matrix == g.matrix or VPolytope(
            2, tuple(inv.apply(v) for v in triple_simplex.vertices)) == p2_dual

    def test_agrees_with_normal_form_on_corpus(self):
        from ehrkit.corpus import enumerate_fano_2d

        polys = enumerate_fano_2d(3)[:8]
        for i, a in enumerate(polys):
            for b in polys[i + 1:]:
                same_nf = normal_form(a) == normal_form(b)
                assert (are_equivalent(a, b) is not None) == same_nf


class TestMultipleOfSimplex:
    def test_shifted_triple_simplex(self, p2_dual, triple_simplex):
        f = is_multiple_of_unimodular_simplex(p2_dual, 3)
        assert f is not None
        image = VPolytope(2, tuple(f.apply(v) for v in p2_dual.vertices))
        assert image == triple_simplex

    def test_cube_is_not_a_simplex(self, square2):
        assert is_multiple_of_unimodular_simplex(square2, 3) is None

    @pytest.mark.parametrize("n,lam", [(2, 3), (3, 4), (5, 6)])
    def test_scaled_simplex_identity(self, n, lam):
        f = is_multiple_of_unimodular_simplex(standard_simplex(n, lam), lam)
        assert f is not None
        assert f.matrix == tuple(
            tuple(1 if i == j else 0 for j in range(n)) for i in range(n))
        assert f.translation == (0,) * n

    def test_wrong_multiplier(self, triple_simplex):
        assert is_multiple_of_unimodular_simplex(triple_simplex, 2) is None

    def test_dimension_independent(self):
        rng = random.Random(53)
        for n in (2, 3, 5):
            u = random_unimodular_map(rng, n, ops=4, shift=1)
            k = affine_image(standard_simplex(n, n + 1), u.as_rational())
            f = is_multiple_of_unimodular_simplex(k, n + 1)
            assert f is not None
            image = VPolytope(n, tuple(f.apply(v) for v in k.vertices))
            assert image == standard_simplex(n, n + 1)
