import random
from fractions import Fraction as F

import pytest

from ehrkit.errors import DegenerateInput, Empty, SingularMap, Unbounded
from ehrkit.kernel import (
    HalfSpace,
    HPolytope,
    RationalAffineMap,
    VPolytope,
    affine_dim,
    affine_image,
    barycenter,
    contains,
    cube,
    empty_hpolytope,
    h_to_v,
    hull,
    intersect,
    intersect_polytopes,
    is_empty,
    region_volume,
    standard_simplex,
    triangulate,
    v_to_h,
    volume,
)
from ehrkit.linalg import dot, vec
from ehrkit.randgen import random_polytope, random_unimodular_map

from oracles import shoelace_area, signed_facet_volume


def rational_16gon():
    ts = [F(i, 8) for i in range(-7, 8)]
    pts = [((1 - t * t) / (1 + t * t), 2 * t / (1 + t * t)) for t in ts]
    pts.append((F(-1), F(0)))
    return hull(pts)


class TestHull:
    def test_drops_interior_point(self):
        p = hull([(0, 0), (1, 0), (0, 1), (F(1, 4), F(1, 4))])
        assert p.vertices == (vec((0, 0)), vec((0, 1)), vec((1, 0)))

    def test_counterexample_parallelogram(self, counterexample_body):
        assert len(counterexample_body.vertices) == 4

    def test_collinear_rejected(self):
        with pytest.raises(DegenerateInput):
            hull([(0, 0), (1, 0), (2, 0)])

    def test_duplicate_points_collapse(self):
        p = hull([(0, 0), (0, 0), (1, 0), (0, 1)])
        assert len(p.vertices) == 3

    def test_point_at_the_centroid(self):
        # the vertex average coincides with an input point
        p = hull([(0, 0), (1, 0), (0, 1), (F(1, 3), F(1, 3))])
        assert p.vertices == (vec((0, 0)), vec((0, 1)), vec((1, 0)))


class TestConversions:
    def test_simplex_facets(self):
        h = v_to_h(standard_simplex(2))
        assert h.facets == (((-1, 0), F(0)), ((0, -1), F(0)), ((1, 1), F(1)))

    def test_shifted_triple_simplex_facets(self, p2_dual):
        # hand computation: x1 >= -1, x2 >= -1, x1 + x2 <= 1
        assert v_to_h(p2_dual).facets == (
            ((-1, 0), F(1)), ((0, -1), F(1)), ((1, 1), F(1)))

    def test_cube_facets(self):
        assert v_to_h(cube(2)).facets == (
            ((-1, 0), F(1)), ((0, -1), F(1)), ((0, 1), F(1)), ((1, 0), F(1)))

    @pytest.mark.parametrize("n", [2, 3])
    def test_corner_system_gives_scaled_simplex(self, n):
        facets = [tuple(-1 if j == i else 0 for j in range(n)) for i in range(n)]
        system = HPolytope(n, tuple((a, F(0)) for a in facets)
                           + (((1,) * n, F(n)),))
        assert h_to_v(system) == standard_simplex(n, n)

    def test_infeasible_raises_empty(self):
        with pytest.raises(Empty):
            h_to_v(HPolytope(1, (((1,), F(0)), ((-1,), F(-1)))))

    def test_halfline_raises_unbounded(self):
        with pytest.raises(Unbounded):
            h_to_v(HPolytope(1, (((-1,), F(0)),)))

    def test_roundtrip_on_random_bodies(self):
        rng = random.Random(101)
        for dim in (1, 2, 3):
            for _ in range(8):
                p = random_polytope(rng, dim)
                assert h_to_v(v_to_h(p)) == p


class TestTriangulate:
    def test_simplex_single_cell(self):
        tri = triangulate(standard_simplex(3))
        assert len(tri.simplices) == 1

    def test_square_two_cells(self, unit_square):
        assert len(triangulate(unit_square).simplices) == 2

    def test_16gon_fan(self):
        assert len(triangulate(rational_16gon()).simplices) == 14

    def test_cells_are_full_dimensional_and_tile(self):
        rng = random.Random(7)
        for dim in (2, 3):
            p = random_polytope(rng, dim)
            tri = triangulate(p)
            total = F(0)
            hp = v_to_h(p)
            for cell in tri.simplices:
                pts = tri.simplex_points(cell)
                sub = VPolytope(dim, pts)
                assert len(pts) == dim + 1
                assert all(contains(hp, q) for q in pts)
                total += volume(sub)
            assert total == volume(p)


class TestMeasures:
    def test_triple_simplex_volume(self, triple_simplex):
        assert volume(triple_simplex) == F(9, 2)

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_unit_cube_volume(self, n):
        half = cube(n, F(1, 2))
        assert volume(half) == 1

    def test_parallelogram_volume_matches_shoelace(self, counterexample_body):
        assert volume(counterexample_body) == 3
        assert shoelace_area(counterexample_body) == 3

    def test_triple_simplex_barycenter(self, triple_simplex):
        assert barycenter(triple_simplex) == vec((1, 1))

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_cube_barycenter_origin(self, n):
        assert barycenter(cube(n)) == vec([0] * n)

    def test_simplex_centroid(self):
        assert barycenter(standard_simplex(2)) == vec((F(1, 3), F(1, 3)))

    def test_volume_against_signed_facet_oracle(self):
        rng = random.Random(23)
        for dim in (2, 3):
            for _ in range(10):
                p = random_polytope(rng, dim)
                assert volume(p) == signed_facet_volume(p)

    def test_polygon_volume_against_shoelace(self):
        rng = random.Random(29)
        for _ in range(15):
            p = random_polytope(rng, 2)
            assert volume(p) == shoelace_area(p)


class TestIntersect:
    def test_simplex_cap(self, triple_simplex):
        capped = intersect(v_to_h(triple_simplex), HalfSpace((1, 1), 2))
        assert h_to_v(capped) == standard_simplex(2, 2)

    def test_trivial_halfspace_is_identity(self, triple_simplex):
        h = v_to_h(triple_simplex)
        assert intersect(h, HalfSpace((1, 0), 1000)) == h

    def test_square_split(self, unit_square):
        part = intersect(v_to_h(unit_square), HalfSpace((1, 0), F(1, 2)))
        assert h_to_v(part) == VPolytope(
            2, ((0, 0), (F(1, 2), 0), (0, 1), (F(1, 2), 1)))

    def test_empty_and_lower_dimensional(self, unit_square):
        h = v_to_h(unit_square)
        gone = intersect(h, HalfSpace((1, 0), -1))
        assert is_empty(gone)
        assert affine_dim(gone) == -1
        assert region_volume(gone) == 0
        edge = intersect(h, HalfSpace((1, 0), 0))
        assert not is_empty(edge)
        assert affine_dim(edge) == 1
        assert region_volume(edge) == 0

    def test_volume_additivity(self):
        rng = random.Random(31)
        for dim in (2, 3):
            for _ in range(6):
                p = random_polytope(rng, dim)
                h = v_to_h(p)
                b = barycenter(p)
                normal = tuple(rng.randint(-3, 3) for _ in range(dim))
                if not any(normal):
                    normal = (1,) + (0,) * (dim - 1)
                cut = HalfSpace(vec(normal), dot(normal, b))
                lhs = region_volume(intersect(h, cut))
                rhs = region_volume(intersect(h, cut.complement_closure()))
                assert lhs + rhs == volume(p)
                sub = intersect(h, cut)
                if not is_empty(sub) and affine_dim(sub) == dim:
                    for q in h_to_v(sub).vertices:
                        assert contains(h, q)
                        assert cut.contains(q)

    def test_self_intersection(self, triple_simplex):
        h = v_to_h(triple_simplex)
        assert intersect_polytopes(h, h) == h

    def test_hexagon_core(self, p2_dual):
        h = v_to_h(p2_dual)
        nh = v_to_h(p2_dual.negate())
        core = h_to_v(intersect_polytopes(h, nh))
        assert core == hull([(1, 0), (0, 1), (-1, 0), (0, -1), (1, -1), (-1, 1)])
        assert volume(core) == 3

    def test_disjoint_translates(self, unit_square):
        far = unit_square.translate((10, 10))
        out = intersect_polytopes(v_to_h(unit_square), v_to_h(far))
        assert is_empty(out)
        assert out == empty_hpolytope(2)


class TestAffineImage:
    def test_identity(self, triple_simplex):
        f = RationalAffineMap(((1, 0), (0, 1)), (0, 0))
        assert affine_image(triple_simplex, f) == triple_simplex

    def test_shift_onto_triple_simplex(self, p2_dual, triple_simplex):
        f = RationalAffineMap(((1, 0), (0, 1)), (1, 1))
        assert affine_image(p2_dual, f) == triple_simplex

    def test_scaling_volume(self, triple_simplex):
        f = RationalAffineMap(((F(3, 2), 0), (0, F(3, 2))), (0, 0))
        assert volume(affine_image(triple_simplex, f)) == F(9, 4) * F(9, 2)

    def test_singular_map_rejected(self):
        with pytest.raises(SingularMap):
            RationalAffineMap(((1, 1), (1, 1)), (0, 0))

    def test_volume_and_barycenter_covariance(self):
        rng = random.Random(37)
        for dim in (1, 2, 3):
            for _ in range(6):
                p = random_polytope(rng, dim)
                rows = None
                while rows is None:
                    cand = tuple(
                        tuple(F(rng.randint(-3, 3), rng.randint(1, 4))
                              for _ in range(dim))
                        for _ in range(dim))
                    try:
                        f = RationalAffineMap(
                            cand, tuple(rng.randint(-2, 2) for _ in range(dim)))
                        rows = cand
                    except SingularMap:
                        continue
                q = affine_image(p, f)
                assert volume(q) == abs(f.det) * volume(p)
                assert barycenter(q) == f.apply(barycenter(p))

    def test_unimodular_maps_preserve_volume(self):
        rng = random.Random(41)
        p = random_polytope(rng, 3)
        for _ in range(5):
            u = random_unimodular_map(rng, 3)
            assert volume(affine_image(p, u.as_rational())) == volume(p)


class TestContains:
    def test_origin_strictly_inside(self, p2_dual):
        assert contains(v_to_h(p2_dual), (0, 0), strict=True)

    def test_vertex_not_strict(self, p2_dual):
        assert contains(v_to_h(p2_dual), (-1, -1))
        assert not contains(v_to_h(p2_dual), (-1, -1), strict=True)

    def test_dual_boundary_point(self, counterexample_body):
        from ehrkit.lattice import dual_polytope

        dual = dual_polytope(counterexample_body)
        assert contains(v_to_h(dual), (1, -2))
        assert not contains(v_to_h(dual), (1, -2), strict=True)
