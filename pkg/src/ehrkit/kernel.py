"""Exact polytope representations, conversions, and measure primitives.

All geometry is exact rational arithmetic on `fractions.Fraction`; there is
no floating point anywhere. Vertex enumeration runs a double-description
sweep (incremental halfspace insertion starting from an exact bounding box),
and facet enumeration reuses the same engine through polarity. Values are
immutable and every operation is pure, so results of the expensive
conversions are memoized.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Iterable, Sequence

from .errors import DegenerateInput, Empty, SingularMap, Unbounded
from .linalg import (
    IntVec,
    Mat,
    Vec,
    affine_rank,
    dot,
    frac,
    identity_mat,
    int_mat_det,
    int_rank,
    mat_det,
    mat_inv,
    mat_vec,
    primitive_normal,
    unit_vec,
    vadd,
    vec,
    vneg,
    vscale,
    vsub,
    zero_vec,
)

Facet = tuple[IntVec, Fraction]  # <normal, x> <= offset, normal primitive integer


@dataclass(frozen=True)
class HalfSpace:
    """Closed halfspace {x : <normal, x> <= offset}."""

    normal: Vec
    offset: Fraction

    def __post_init__(self):
        object.__setattr__(self, "normal", vec(self.normal))
        object.__setattr__(self, "offset", frac(self.offset))
        if all(x == 0 for x in self.normal):
            raise ValueError("halfspace normal must be nonzero")

    def primitive(self) -> Facet:
        return primitive_normal(self.normal, self.offset)

    def complement_closure(self) -> "HalfSpace":
        return HalfSpace(vneg(self.normal), -self.offset)

    def boundary_contains(self, x: Sequence) -> bool:
        return dot(self.normal, vec(x)) == self.offset

    def contains(self, x: Sequence, strict: bool = False) -> bool:
        v = dot(self.normal, vec(x))
        return v < self.offset if strict else v <= self.offset


@dataclass(frozen=True)
class VPolytope:
    """Full-dimensional polytope as an irredundant, lexicographically sorted
    vertex list. Build from arbitrary point sets with `hull()`."""

    dim: int
    vertices: tuple[Vec, ...]

    def __post_init__(self):
        vs = tuple(sorted({vec(v) for v in self.vertices}))
        object.__setattr__(self, "vertices", vs)
        if not vs:
            raise DegenerateInput("no vertices")
        if any(len(v) != self.dim for v in vs):
            raise DegenerateInput("vertex length does not match dimension")
        if affine_rank(vs) != self.dim:
            raise DegenerateInput("vertices do not span the ambient space")

    def is_lattice(self) -> bool:
        return all(c.denominator == 1 for v in self.vertices for c in v)

    def translate(self, t: Sequence) -> "VPolytope":
        t = vec(t)
        return VPolytope(self.dim, tuple(vadd(v, t) for v in self.vertices))

    def negate(self) -> "VPolytope":
        return VPolytope(self.dim, tuple(vneg(v) for v in self.vertices))

    def scale(self, s) -> "VPolytope":
        if frac(s) == 0:
            raise DegenerateInput("zero scaling factor")
        return VPolytope(self.dim, tuple(vscale(s, v) for v in self.vertices))


@dataclass(frozen=True)
class HPolytope:
    """Region as facet inequalities <normal, x> <= offset with primitive
    integer normals, sorted canonically. Constructors (`v_to_h`, `intersect`)
    guarantee irredundancy; the dataclass itself only canonicalizes."""

    dim: int
    facets: tuple[Facet, ...]

    def __post_init__(self):
        fs = []
        for normal, offset in self.facets:
            a, c = primitive_normal(normal, offset)
            if len(a) != self.dim:
                raise DegenerateInput("facet normal length does not match dimension")
            fs.append((a, c))
        object.__setattr__(self, "facets", tuple(sorted(set(fs))))

    def halfspaces(self) -> tuple[HalfSpace, ...]:
        return tuple(HalfSpace(vec(a), c) for a, c in self.facets)


@dataclass(frozen=True)
class Triangulation:
    """Simplices as (dim+1)-tuples of indices into a shared vertex pool."""

    dim: int
    points: tuple[Vec, ...]
    simplices: tuple[tuple[int, ...], ...]

    def simplex_points(self, cell: tuple[int, ...]) -> tuple[Vec, ...]:
        return tuple(self.points[i] for i in cell)


@dataclass(frozen=True)
class RationalAffineMap:
    """Invertible map x -> M x + t with rational entries."""

    matrix: Mat
    translation: Vec

    def __post_init__(self):
        object.__setattr__(self, "matrix", tuple(vec(r) for r in self.matrix))
        object.__setattr__(self, "translation", vec(self.translation))
        if self.det == 0:
            raise SingularMap("map matrix is singular")

    @property
    def det(self) -> Fraction:
        return mat_det(self.matrix)

    def apply(self, x: Sequence) -> Vec:
        return vadd(mat_vec(self.matrix, vec(x)), self.translation)

    def inverse(self) -> "RationalAffineMap":
        inv = mat_inv(self.matrix)
        return RationalAffineMap(inv, vneg(mat_vec(inv, self.translation)))


@dataclass(frozen=True)
class UnimodularAffineMap:
    """Affine lattice automorphism: integer matrix with |det| = 1 plus an
    integer translation."""

    matrix: tuple[IntVec, ...]
    translation: IntVec

    def __post_init__(self):
        m = tuple(tuple(int(x) for x in row) for row in self.matrix)
        t = tuple(int(x) for x in self.translation)
        object.__setattr__(self, "matrix", m)
        object.__setattr__(self, "translation", t)
        if abs(int_mat_det(m)) != 1:
            raise ValueError("matrix determinant must be +-1")

    @classmethod
    def identity(cls, n: int) -> "UnimodularAffineMap":
        return cls(identity_mat(n), (0,) * n)

    def apply(self, x: Sequence) -> Vec:
        return vadd(mat_vec(self.matrix, vec(x)), vec(self.translation))

    def as_rational(self) -> RationalAffineMap:
        return RationalAffineMap(self.matrix, self.translation)

    def inverse(self) -> "UnimodularAffineMap":
        inv = mat_inv(self.matrix)
        minv = tuple(tuple(int(x) for x in row) for row in inv)
        t = mat_vec(minv, self.translation)
        return UnimodularAffineMap(minv, tuple(-int(x) for x in t))

    def compose(self, other: "UnimodularAffineMap") -> "UnimodularAffineMap":
        """self after other: x -> self(other(x))."""
        n = len(self.matrix)
        m = tuple(
            tuple(sum(self.matrix[i][k] * other.matrix[k][j] for k in range(n))
                  for j in range(n))
            for i in range(n)
        )
        t = vadd(mat_vec(self.matrix, vec(other.translation)), vec(self.translation))
        return UnimodularAffineMap(m, tuple(int(x) for x in t))


# ---------------------------------------------------------------------------
# vertex enumeration: incremental halfspace insertion from an exact box
# ---------------------------------------------------------------------------


def _cramer_box_bound(dim: int, facets: Sequence[Facet]) -> int:
    """Integer M such that every vertex coordinate of the (bounded) region
    has absolute value < M: vertices solve integer dim x dim systems, so
    Hadamard-type bound dim! * c^dim applies after clearing denominators."""
    c = 1
    for a, off in facets:
        q = off.denominator
        c = max(c, max(abs(x) * q for x in a), abs(off.numerator))
    return math.factorial(dim) * c**dim + 1


def _enumerate_vertices(dim: int, facets: Sequence[Facet]) -> list[Vec]:
    """Exact vertex set of {x : <a,x> <= c for all facets}, intersected with
    nothing else. Raises Empty if infeasible, Unbounded if any direction
    escapes. The result may span a lower-dimensional affine subspace."""
    if dim < 1:
        raise DegenerateInput("dimension must be positive")
    big = _cramer_box_bound(dim, facets)
    normals: list[IntVec] = []
    for i in range(dim):
        normals.append(unit_vec(dim, i, 1))
        normals.append(unit_vec(dim, i, -1))
    offsets: list[Fraction] = [frac(big)] * (2 * dim)
    box_mask = (1 << (2 * dim)) - 1

    verts: list[Vec] = []
    active: list[int] = []
    for signs in product((big, -big), repeat=dim):
        v = vec(signs)
        mask = 0
        for i, s in enumerate(signs):
            mask |= 1 << (2 * i if s > 0 else 2 * i + 1)
        verts.append(v)
        active.append(mask)

    for a, c in facets:
        bit_index = len(normals)
        normals.append(a)
        offsets.append(c)
        bit = 1 << bit_index
        slack = [c - dot(a, v) for v in verts]
        keep_v: list[Vec] = []
        keep_a: list[int] = []
        inside: list[int] = []
        outside: list[int] = []
        for i, s in enumerate(slack):
            if s > 0:
                inside.append(i)
                keep_v.append(verts[i])
                keep_a.append(active[i])
            elif s == 0:
                keep_v.append(verts[i])
                keep_a.append(active[i] | bit)
            else:
                outside.append(i)
        if not keep_v:
            raise Empty("inequality system is infeasible")
        if outside:
            for i in inside:
                ai = active[i]
                si = slack[i]
                vi = verts[i]
                for j in outside:
                    common = ai & active[j]
                    if common.bit_count() < dim - 1:
                        continue
                    rows = [normals[k] for k in _bits(common)]
                    if int_rank(rows, stop_at=dim - 1) < dim - 1:
                        continue
                    t = si / (si - slack[j])
                    x = vadd(vi, vscale(t, vsub(verts[j], vi)))
                    keep_v.append(x)
                    keep_a.append((common) | bit)
        verts = keep_v
        active = keep_a

    if any(mask & box_mask for mask in active):
        raise Unbounded("inequality system is unbounded")
    return verts


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def h_to_v(p: HPolytope) -> VPolytope:
    """Exact vertex enumeration; inverse of `v_to_h` for full-dimensional
    bounded input. Raises Empty / Unbounded / DegenerateInput."""
    return _h_to_v_cached(p)


@lru_cache(maxsize=4096)
def _h_to_v_cached(p: HPolytope) -> VPolytope:
    verts = _enumerate_vertices(p.dim, p.facets)
    return VPolytope(p.dim, tuple(verts))


def _facets_of_points(points: Sequence[Vec], dim: int) -> tuple[Facet, ...]:
    """Irredundant facet inequalities of conv(points) via polarity: facets
    correspond to vertices of the polar taken about an interior point."""
    center = vscale(Fraction(1, len(points)), [sum(c) for c in zip(*points)])
    shifted = [vsub(p, center) for p in points]
    polar: list[Facet] = []
    seen = set()
    for p in shifted:
        if all(x == 0 for x in p):
            continue  # point at the center: trivially redundant constraint
        a, c = primitive_normal(p, 1)
        if (a, c) not in seen:
            seen.add((a, c))
            polar.append((a, c))
    try:
        polar_verts = _enumerate_vertices(dim, polar)
    except Unbounded:
        # polar unbounded <=> center not interior <=> points not full-dim
        raise DegenerateInput("points do not span the ambient space")
    facets = []
    for y in polar_verts:
        facets.append(primitive_normal(y, 1 + dot(y, center)))
    return tuple(sorted(facets))


def v_to_h(p: VPolytope) -> HPolytope:
    """Irredundant facet description with primitive integer normals."""
    return _v_to_h_cached(p)


@lru_cache(maxsize=4096)
def _v_to_h_cached(p: VPolytope) -> HPolytope:
    return HPolytope(p.dim, _facets_of_points(p.vertices, p.dim))


def hull(points: Iterable[Sequence]) -> VPolytope:
    """Convex hull of rational points: drops non-vertices, canonicalizes.

    Raises DegenerateInput when the affine hull is lower-dimensional.
    """
    pts = sorted({vec(p) for p in points})
    if not pts:
        raise DegenerateInput("no points")
    dim = len(pts[0])
    if any(len(p) != dim for p in pts):
        raise DegenerateInput("inconsistent point dimensions")
    if affine_rank(pts) != dim:
        raise DegenerateInput("points do not span the ambient space")
    facets = _facets_of_points(pts, dim)
    verts = []
    for p in pts:
        act = [a for a, c in facets if dot(a, p) == c]
        if len(act) >= dim and int_rank(act, stop_at=dim) >= dim:
            verts.append(p)
    return VPolytope(dim, tuple(verts))


def contains(p: HPolytope, x: Sequence, strict: bool = False) -> bool:
    """Exact membership test; strict means interior."""
    x = vec(x)
    if strict:
        return all(dot(a, x) < c for a, c in p.facets)
    return all(dot(a, x) <= c for a, c in p.facets)


def empty_hpolytope(dim: int) -> HPolytope:
    """Canonical infeasible system {x1 <= -1, -x1 <= -1}."""
    return HPolytope(dim, (
        (unit_vec(dim, 0, 1), Fraction(-1)),
        (unit_vec(dim, 0, -1), Fraction(-1)),
    ))


def is_empty(p: HPolytope) -> bool:
    try:
        _enumerate_vertices(p.dim, p.facets)
    except Empty:
        return True
    return False


def affine_dim(p: HPolytope) -> int:
    """Affine dimension of the region; -1 if empty."""
    try:
        verts = _enumerate_vertices(p.dim, p.facets)
    except Empty:
        return -1
    return affine_rank(verts)


def _reduced_system(dim: int, cands: list[Facet]) -> HPolytope:
    """Greedy irredundant subsystem with the same vertex set (used only for
    lower-dimensional intersections, where polarity is unavailable)."""
    target = sorted(_enumerate_vertices(dim, cands))
    keep = list(dict.fromkeys(cands))
    i = 0
    while i < len(keep):
        trial = keep[:i] + keep[i + 1:]
        drop = False
        if trial:
            try:
                if sorted(_enumerate_vertices(dim, trial)) == target:
                    drop = True
            except (Empty, Unbounded):
                drop = False
        if drop:
            keep.pop(i)
        else:
            i += 1
    return HPolytope(dim, tuple(keep))


def _intersect_facets(dim: int, cands: list[Facet]) -> HPolytope:
    try:
        verts = _enumerate_vertices(dim, cands)
    except Empty:
        return empty_hpolytope(dim)
    if affine_rank(verts) == dim:
        return HPolytope(dim, _facets_of_points(tuple(sorted(verts)), dim))
    return _reduced_system(dim, cands)


def intersect(p: HPolytope, h: HalfSpace) -> HPolytope:
    """P cut by a halfspace; possibly empty or lower-dimensional (inspect
    with `is_empty` / `affine_dim`)."""
    return _intersect_facets(p.dim, list(p.facets) + [h.primitive()])


def intersect_polytopes(a: HPolytope, b: HPolytope) -> HPolytope:
    if a.dim != b.dim:
        raise DegenerateInput("dimension mismatch")
    return _intersect_facets(a.dim, list(a.facets) + list(b.facets))


def affine_image(p: VPolytope, f: RationalAffineMap) -> VPolytope:
    """Vertex-wise image; invertibility makes vertices map onto vertices."""
    return VPolytope(p.dim, tuple(f.apply(v) for v in p.vertices))


# ---------------------------------------------------------------------------
# triangulation and measures
# ---------------------------------------------------------------------------


def triangulate(p: VPolytope) -> Triangulation:
    """Deterministic fan from the first canonical vertex over a recursively
    triangulated boundary."""
    return _triangulate_cached(p)


@lru_cache(maxsize=4096)
def _triangulate_cached(p: VPolytope) -> Triangulation:
    cells = _fan_cells(list(p.vertices), p.dim)
    return Triangulation(p.dim, p.vertices, tuple(cells))


def _fan_cells(points: list[Vec], dim: int) -> list[tuple[int, ...]]:
    """Triangulate conv(points); points are the lex-sorted vertex list."""
    if len(points) == dim + 1:
        return [tuple(range(dim + 1))]
    facets = _facets_of_points(points, dim)
    apex = points[0]
    cells: list[tuple[int, ...]] = []
    for a, c in facets:
        if dot(a, apex) == c:
            continue
        fidx = [i for i, q in enumerate(points) if dot(a, q) == c]
        j = max(range(dim), key=lambda k: (abs(a[k]), -k))
        proj = sorted(
            (tuple(points[i][k] for k in range(dim) if k != j), i) for i in fidx
        )
        sub = _fan_cells([q for q, _ in proj], dim - 1)
        for cell in sub:
            cells.append((0, *(proj[k][1] for k in cell)))
    return cells


def _simplex_volume(pts: Sequence[Vec], dim: int) -> Fraction:
    base = pts[0]
    m = tuple(vsub(q, base) for q in pts[1:])
    return abs(mat_det(m)) / math.factorial(dim)


def volume(p: VPolytope) -> Fraction:
    """Exact Euclidean volume via the fan triangulation."""
    return _volume_cached(p)


@lru_cache(maxsize=8192)
def _volume_cached(p: VPolytope) -> Fraction:
    tri = triangulate(p)
    total = Fraction(0)
    for cell in tri.simplices:
        total += _simplex_volume(tri.simplex_points(cell), p.dim)
    if total == 0:
        raise DegenerateInput("zero volume")
    return total


def barycenter(p: VPolytope) -> Vec:
    """Exact centroid: volume-weighted average of simplex centroids."""
    return _barycenter_cached(p)


@lru_cache(maxsize=8192)
def _barycenter_cached(p: VPolytope) -> Vec:
    tri = triangulate(p)
    total = Fraction(0)
    acc = zero_vec(p.dim)
    for cell in tri.simplices:
        pts = tri.simplex_points(cell)
        vol = _simplex_volume(pts, p.dim)
        centroid = vscale(Fraction(1, len(pts)), [sum(c) for c in zip(*pts)])
        acc = vadd(acc, vscale(vol, centroid))
        total += vol
    return vscale(1 / total, acc)


def region_volume(p: HPolytope) -> Fraction:
    """Volume of a possibly empty or lower-dimensional region (then 0)."""
    try:
        verts = _enumerate_vertices(p.dim, p.facets)
    except Empty:
        return Fraction(0)
    if affine_rank(verts) < p.dim:
        return Fraction(0)
    return volume(VPolytope(p.dim, tuple(verts)))


def standard_simplex(n: int, scale: int | Fraction = 1) -> VPolytope:
    """scale * conv(0, e_1, ..., e_n)."""
    pts = [zero_vec(n)] + [vscale(scale, unit_vec(n, i)) for i in range(n)]
    return VPolytope(n, tuple(pts))


def cube(n: int, radius: int | Fraction = 1) -> VPolytope:
    """[-radius, radius]^n."""
    r = frac(radius)
    return VPolytope(n, tuple(vec(signs) for signs in product((-r, r), repeat=n)))
