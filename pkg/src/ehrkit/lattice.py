"""Lattice-specific predicates and constructions.

Lattice point enumeration, polar duality, reflexive/Fano tests, facet
lattice data, and unimodular equivalence through a canonical normal form
(lexicographically maximal vertex-facet slack matrix, finished by a Hermite
normal form of the translated vertex matrix).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations, product

from .errors import (
    DimensionUnsupported,
    KernelError,
    NotLatticePolytope,
    OriginNotInterior,
)
from .kernel import (
    HPolytope,
    UnimodularAffineMap,
    VPolytope,
    _enumerate_vertices,
    barycenter,
    contains,
    h_to_v,
    standard_simplex,
    v_to_h,
)
from .linalg import (
    IntVec,
    dot,
    hnf_row,
    mat_det,
    mat_inv,
    mat_vec,
    vec,
    vsub,
    zero_vec,
)
from .report import EQUALITY, NOT_APPLICABLE, VIOLATION, CheckReport

MAX_NORMAL_FORM_DIM = 4
_BOX_SCAN_CAP = 10_000_000


def lattice_points(p: HPolytope, strict: bool = False) -> tuple[IntVec, ...]:
    """All integer points of the region (strict: interior only), enumerated
    over the exact integer bounding box, sorted lexicographically."""
    verts = _enumerate_vertices(p.dim, p.facets)
    ranges = []
    total = 1
    for i in range(p.dim):
        coords = [v[i] for v in verts]
        lo = math.ceil(min(coords))
        hi = math.floor(max(coords))
        ranges.append(range(lo, hi + 1))
        total *= max(0, hi - lo + 1)
    if total > _BOX_SCAN_CAP:
        raise KernelError(f"bounding box too large to scan ({total} candidates)")
    out = []
    facets = p.facets
    for point in product(*ranges):
        if strict:
            if all(sum(a * x for a, x in zip(n, point)) < c for n, c in facets):
                out.append(point)
        else:
            if all(sum(a * x for a, x in zip(n, point)) <= c for n, c in facets):
                out.append(point)
    return tuple(out)


def interior_lattice_points(q: VPolytope) -> tuple[IntVec, ...]:
    return lattice_points(v_to_h(q), strict=True)


def has_origin_interior(q: VPolytope) -> bool:
    return contains(v_to_h(q), zero_vec(q.dim), strict=True)


def dual_polytope(q: VPolytope) -> VPolytope:
    """Polar dual {x : <v, x> >= -1 for all vertices v}; requires the origin
    strictly interior, and then satisfies dual(dual(Q)) == Q."""
    if not has_origin_interior(q):
        raise OriginNotInterior("dual polytope requires 0 strictly interior")
    facets = tuple((tuple(-c for c in v), Fraction(1)) for v in q.vertices)
    return h_to_v(HPolytope(q.dim, facets))


def _primitive_lattice_vertex(v) -> bool:
    g = 0
    for c in v:
        if c.denominator != 1:
            return False
        g = math.gcd(g, int(c))
    return g == 1


def is_fano(q: VPolytope) -> bool:
    """Lattice polytope, origin strictly interior, all vertices primitive."""
    if not q.is_lattice():
        return False
    if not has_origin_interior(q):
        return False
    return all(_primitive_lattice_vertex(v) for v in q.vertices)


def is_reflexive(q: VPolytope) -> bool:
    """True iff the dual is again a lattice polytope, equivalently iff every
    facet lies at lattice distance 1 from the origin."""
    if not q.is_lattice():
        raise NotLatticePolytope("reflexivity is defined for lattice polytopes")
    if not has_origin_interior(q):
        raise OriginNotInterior("reflexivity requires 0 strictly interior")
    return all(c == 1 for _, c in v_to_h(q).facets)


@dataclass(frozen=True)
class FacetData:
    normal: IntVec
    lattice_distance: Fraction
    interior_points: tuple[IntVec, ...]


@dataclass(frozen=True)
class FacetLatticeData:
    facets: tuple[FacetData, ...]

    def all_interior_points(self) -> tuple[IntVec, ...]:
        return tuple(sorted({p for f in self.facets for p in f.interior_points}))


def facet_lattice_data(p: VPolytope) -> FacetLatticeData:
    """Per facet: primitive outer normal, lattice distance from the origin,
    and the lattice points in the facet's relative interior."""
    if not has_origin_interior(p):
        raise OriginNotInterior("facet lattice data requires 0 strictly interior")
    hp = v_to_h(p)
    pts = lattice_points(hp, strict=False)
    data = []
    for i, (a, c) in enumerate(hp.facets):
        rel = []
        for x in pts:
            if sum(u * w for u, w in zip(a, x)) != c:
                continue
            if all(sum(u * w for u, w in zip(a2, x)) < c2
                   for j, (a2, c2) in enumerate(hp.facets) if j != i):
                rel.append(x)
        data.append(FacetData(a, c, tuple(rel)))
    return FacetLatticeData(tuple(data))


def root_symmetry_check(s: VPolytope) -> CheckReport:
    """For a reflexive polytope with barycenter 0, the facet-relative-interior
    lattice points must form a centrally symmetric set."""
    try:
        reflexive = is_reflexive(s)
    except (NotLatticePolytope, OriginNotInterior) as exc:
        return CheckReport("root-symmetry", NOT_APPLICABLE, detail=str(exc))
    if not reflexive:
        return CheckReport("root-symmetry", NOT_APPLICABLE,
                           detail="polytope is not reflexive")
    if any(c != 0 for c in barycenter(s)):
        return CheckReport("root-symmetry", NOT_APPLICABLE,
                           detail="barycenter is not the origin")
    roots = facet_lattice_data(s).all_interior_points()
    root_set = set(roots)
    violating = [m for m in roots if tuple(-c for c in m) not in root_set]
    if violating:
        return CheckReport(
            "root-symmetry", VIOLATION,
            values=(("roots", roots), ("asymmetric", tuple(violating))),
            witness=violating[0],
        )
    return CheckReport("root-symmetry", EQUALITY, values=(("roots", roots),))


# ---------------------------------------------------------------------------
# normal form and unimodular equivalence
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class NormalForm:
    """Canonical representative of the unimodular equivalence class.

    Two lattice polytopes compare equal here iff they are unimodularly
    equivalent (within the supported dimensions). The provenance fields
    reconstruct a map onto the canonical form.
    """

    matrix: tuple[IntVec, ...]
    transform: tuple[IntVec, ...] = field(compare=False, repr=False)
    base_vertex: IntVec = field(compare=False, repr=False)
    vertex_order: tuple[int, ...] = field(compare=False, repr=False)


def _slack_matrix(q: VPolytope) -> list[list[int]]:
    facets = v_to_h(q).facets
    return [
        [int(c - dot(a, v)) for v in q.vertices]
        for a, c in facets
    ]


def _canonical_leaves(s: list[list[int]]) -> list[tuple[tuple[int, ...], tuple[tuple[int, ...], ...]]]:
    """All (row order, final column groups) realizing the lexicographically
    maximal row-major flattening of `s` over row and column permutations.

    Columns inside one group are interchangeable in the canonical matrix.
    """
    ncols = len(s[0])
    leaves = []

    def refine(groups, row):
        new_groups = []
        canon_row = []
        for g in groups:
            by_val: dict[int, list[int]] = {}
            for col in g:
                by_val.setdefault(row[col], []).append(col)
            for val in sorted(by_val, reverse=True):
                new_groups.append(tuple(by_val[val]))
                canon_row.extend([val] * len(by_val[val]))
        return tuple(new_groups), tuple(canon_row)

    def descend(order, groups, remaining):
        if not remaining:
            leaves.append((tuple(order), groups))
            return
        best_key = None
        branches = []
        for r in remaining:
            new_groups, canon_row = refine(groups, s[r])
            if best_key is None or canon_row > best_key:
                best_key = canon_row
                branches = [(r, new_groups)]
            elif canon_row == best_key:
                branches.append((r, new_groups))
        for r, new_groups in branches:
            descend(order + [r], new_groups, [x for x in remaining if x != r])

    descend([], (tuple(range(ncols)),), list(range(len(s))))
    return leaves


def _column_orders(leaves, limit: int = 40320):
    orders = set()
    for _, groups in leaves:
        pools = [list(permutations(g)) for g in groups]
        count = 1
        for p in pools:
            count *= len(p)
        if count * len(leaves) > limit:
            raise KernelError("normal form tie explosion; polytope too symmetric")
        for combo in product(*pools):
            order = tuple(i for g in combo for i in g)
            orders.add(order)
    return sorted(orders)


def normal_form(q: VPolytope) -> NormalForm:
    """Canonical form invariant under unimodular affine maps; deterministic.

    Dimension capped at 4 for the combinatorial search; use
    `is_multiple_of_unimodular_simplex` for the dimension-independent
    simplex recognition required by the equality case.
    """
    if not q.is_lattice():
        raise NotLatticePolytope("normal form is defined for lattice polytopes")
    if q.dim > MAX_NORMAL_FORM_DIM:
        raise DimensionUnsupported(
            f"normal form supports dimension <= {MAX_NORMAL_FORM_DIM}")
    slack = _slack_matrix(q)
    leaves = _canonical_leaves(slack)
    best = None
    for order in _column_orders(leaves):
        base = q.vertices[order[0]]
        t = [
            [int(q.vertices[j][i] - base[i]) for j in order]
            for i in range(q.dim)
        ]
        h, u = hnf_row(t)
        key = (h, u, order)
        if best is None or key < best:
            best = key
    h, u, order = best
    return NormalForm(
        matrix=h,
        transform=u,
        base_vertex=tuple(int(c) for c in q.vertices[order[0]]),
        vertex_order=order,
    )


def are_equivalent(a: VPolytope, b: VPolytope) -> UnimodularAffineMap | None:
    """A witnessing affine lattice automorphism with f(A) = B, or None."""
    for p in (a, b):
        if not p.is_lattice():
            raise NotLatticePolytope("equivalence is defined for lattice polytopes")
    if a.dim != b.dim or len(a.vertices) != len(b.vertices):
        return None
    nfa = normal_form(a)
    nfb = normal_form(b)
    if nfa != nfb:
        return None
    # U_a (x - t_a) == U_b (f(x) - t_b)  =>  f = U_b^-1 U_a (x - t_a) + t_b
    ub_inv = tuple(tuple(int(x) for x in row) for row in mat_inv(nfb.transform))
    m = tuple(
        tuple(int(sum(ub_inv[i][k] * nfa.transform[k][j] for k in range(a.dim)))
              for j in range(a.dim))
        for i in range(a.dim)
    )
    shift = vsub(vec(nfb.base_vertex), mat_vec(m, vec(nfa.base_vertex)))
    f = UnimodularAffineMap(m, tuple(int(x) for x in shift))
    image = VPolytope(a.dim, tuple(f.apply(v) for v in a.vertices))
    if image != b:
        raise AssertionError("normal form matched but image comparison failed")
    return f


def is_multiple_of_unimodular_simplex(
    k: VPolytope, multiplier: int
) -> UnimodularAffineMap | None:
    """A verified affine lattice automorphism carrying K onto
    multiplier * conv(0, e_1, ..., e_n), or None.

    Dimension independent: K must be a simplex whose edge matrix at some
    vertex has determinant +-multiplier^n with multiplier * E^-1 integral.
    """
    n = k.dim
    if multiplier < 1:
        raise ValueError("multiplier must be a positive integer")
    if len(k.vertices) != n + 1:
        return None
    target = standard_simplex(n, multiplier)
    if k == target:
        return UnimodularAffineMap.identity(n)
    lam = Fraction(multiplier)
    for w in k.vertices:
        others = [v for v in k.vertices if v != w]
        e = tuple(tuple(others[j][i] - w[i] for j in range(n)) for i in range(n))
        det = mat_det(e)
        if det == 0 or abs(det) != lam**n:
            continue
        inv = mat_inv(e)
        u = [[lam * inv[i][j] for j in range(n)] for i in range(n)]
        if any(x.denominator != 1 for row in u for x in row):
            continue
        shift = mat_vec(u, w)
        if any(x.denominator != 1 for x in shift):
            continue
        f = UnimodularAffineMap(
            tuple(tuple(int(x) for x in row) for row in u),
            tuple(-int(x) for x in shift),
        )
        image = VPolytope(n, tuple(f.apply(v) for v in k.vertices))
        if image == target:
            return f
    return None
