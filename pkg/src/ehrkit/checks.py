"""Theorem-level verdicts on rational polytopes.

Volume bound for bodies whose unique interior lattice point is the origin
(classical and barycenter-weighted forms), the shrink construction relating
them, symmetric-core bounds, the halfspace-cut lower bound with its pyramid
equality characterization, the orthant normalization map with its full
inequality chain, and exact certification of the equality case.

Every comparison is exact rational equality; there are no tolerances.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .errors import (
    CertificationContradiction,
    NoSpanningSelection,
    OriginNotInterior,
    PreconditionError,
    SingularMap,
)
from .kernel import (
    HalfSpace,
    RationalAffineMap,
    UnimodularAffineMap,
    VPolytope,
    affine_image,
    barycenter,
    contains,
    intersect,
    intersect_polytopes,
    region_volume,
    v_to_h,
    volume,
)
from .lattice import (
    dual_polytope,
    has_origin_interior,
    interior_lattice_points,
    is_multiple_of_unimodular_simplex,
)
from .linalg import (
    IntVec,
    Vec,
    dot,
    is_zero,
    ones_vec,
    vec,
    vscale,
    vsub,
    zero_vec,
)
from .report import EQUALITY, NOT_APPLICABLE, STRICT, VIOLATION, CheckReport


def _origin(n: int) -> tuple[int, ...]:
    return (0,) * n


def classical_bound(n: int) -> Fraction:
    """(n+1)^n / n!, the conjectured maximal volume."""
    return Fraction((n + 1) ** n, math.factorial(n))


def _compare(value: Fraction, bound: Fraction) -> str:
    if value < bound:
        return STRICT
    if value == bound:
        return EQUALITY
    return VIOLATION


# ---------------------------------------------------------------------------
# barycenter-ray invariant and the shrink construction
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RInvariantResult:
    """Ray ratio of a body with the origin interior.

    `value` is 1 exactly when the barycenter is the origin; otherwise
    `boundary_point` is where the ray from the barycenter through the origin
    exits the body, and value = dist(x,0)/dist(x,b) < 1.
    """

    barycenter: Vec
    boundary_point: Vec | None
    value: Fraction


def r_invariant(k: VPolytope) -> RInvariantResult:
    if not has_origin_interior(k):
        raise OriginNotInterior("ray invariant requires 0 strictly interior")
    b = barycenter(k)
    if is_zero(b):
        return RInvariantResult(b, None, Fraction(1))
    # ray b - t*b, t >= 0; exit parameter through facet <a,x> <= c
    t_exit = None
    for a, c in v_to_h(k).facets:
        speed = -dot(a, b)
        if speed > 0:
            t = (c - dot(a, b)) / speed
            if t_exit is None or t < t_exit:
                t_exit = t
    assert t_exit is not None and t_exit > 1, "origin interior forces exit past 0"
    x = vscale(1 - t_exit, b)
    r = (t_exit - 1) / t_exit
    assert 0 < r < 1
    assert x == vscale(r / (r - 1), b)
    return RInvariantResult(b, x, r)


def shrink_to_barycenter(k: VPolytope) -> VPolytope:
    """K' = r (K - b) with r the ray invariant: contained in K, barycenter 0,
    volume r^n vol(K), and no new interior lattice points. All four
    guarantees are verified, not assumed."""
    res = r_invariant(k)
    r, b = res.value, res.barycenter
    shrunk = VPolytope(k.dim, tuple(vscale(r, vsub(v, b)) for v in k.vertices))
    hk = v_to_h(k)
    assert all(contains(hk, v) for v in shrunk.vertices), "shrink left the body"
    assert is_zero(barycenter(shrunk)), "shrink missed the barycenter"
    assert volume(shrunk) == r**k.dim * volume(k), "shrink volume ratio broken"
    if interior_lattice_points(k) == (_origin(k.dim),):
        assert interior_lattice_points(shrunk) == (_origin(k.dim),)
    return shrunk


# ---------------------------------------------------------------------------
# volume bound checks
# ---------------------------------------------------------------------------


def ehrhart_check(k: VPolytope) -> CheckReport:
    """Volume against (n+1)^n / (n! R^n) for a body whose interior lattice
    points are exactly the origin; the unweighted bound is reported when the
    barycenter is the origin. Equality is certified with a unimodular map."""
    n = k.dim
    if interior_lattice_points(k) != (_origin(n),):
        return CheckReport(
            "ehrhart", NOT_APPLICABLE,
            detail="interior lattice points are not exactly the origin",
        )
    vol = volume(k)
    res = r_invariant(k)
    plain = classical_bound(n)
    bound = plain / res.value**n
    status = _compare(vol, bound)
    values = [("volume", vol), ("r_invariant", res.value),
              ("barycenter", res.barycenter), ("generalized_bound", bound)]
    if is_zero(res.barycenter):
        values.append(("classical_bound", plain))
    witness = None
    if status == EQUALITY:
        witness = certify_equality(k)
    return CheckReport("ehrhart", status, tuple(values), bound, witness)


def milman_pajor_check(k: VPolytope) -> CheckReport:
    """vol(K) <= 2^n vol(K cap -K) for barycenter at the origin."""
    n = k.dim
    if not is_zero(barycenter(k)):
        return CheckReport("milman-pajor", NOT_APPLICABLE,
                           detail="barycenter is not the origin")
    vol = volume(k)
    core = intersect_polytopes(v_to_h(k), v_to_h(k.negate()))
    vol_core = region_volume(core)
    bound = Fraction(2**n) * vol_core
    return CheckReport(
        "milman-pajor", _compare(vol, bound),
        (("volume", vol), ("symmetric_core_volume", vol_core)),
        bound,
    )


def minkowski_combined_check(k: VPolytope) -> CheckReport:
    """With interior lattice points exactly the origin and barycenter 0:
    the symmetric core obeys vol(K cap -K) <= 2^n, hence vol(K) <= 4^n."""
    n = k.dim
    if interior_lattice_points(k) != (_origin(n),):
        return CheckReport("minkowski", NOT_APPLICABLE,
                           detail="interior lattice points are not exactly the origin")
    if not is_zero(barycenter(k)):
        return CheckReport("minkowski", NOT_APPLICABLE,
                           detail="barycenter is not the origin")
    vol = volume(k)
    core = intersect_polytopes(v_to_h(k), v_to_h(k.negate()))
    vol_core = region_volume(core)
    core_bound = Fraction(2**n)
    total_bound = Fraction(4**n)
    s_core = _compare(vol_core, core_bound)
    s_total = _compare(vol, total_bound)
    if VIOLATION in (s_core, s_total):
        status = VIOLATION
    elif EQUALITY in (s_core, s_total):
        status = EQUALITY
    else:
        status = STRICT
    return CheckReport(
        "minkowski", status,
        (("volume", vol), ("symmetric_core_volume", vol_core),
         ("core_bound", core_bound), ("core_status", s_core),
         ("core_margin", core_bound - vol_core),
         ("total_bound", total_bound), ("total_status", s_total),
         ("total_margin", total_bound - vol)),
        total_bound,
    )


# ---------------------------------------------------------------------------
# halfspace cut bound and pyramid equality characterization
# ---------------------------------------------------------------------------


def _cut_margin(k: VPolytope, h: HalfSpace) -> tuple[Fraction, Fraction]:
    n = k.dim
    vol_cut = region_volume(intersect(v_to_h(k), h))
    bound = Fraction(n, n + 1) ** n * volume(k)
    return vol_cut, bound


def grunbaum_check(k: VPolytope, h: HalfSpace) -> CheckReport:
    """Any closed halfspace containing the barycenter keeps at least
    (n/(n+1))^n of the volume; equality is characterized by
    `pyramid_equality_check` and its verdict is attached on equality."""
    b = barycenter(k)
    if not h.contains(b):
        return CheckReport("grunbaum", NOT_APPLICABLE,
                           detail="halfspace does not contain the barycenter")
    vol_cut, bound = _cut_margin(k, h)
    if vol_cut > bound:
        status = STRICT
    elif vol_cut == bound:
        status = EQUALITY
    else:
        status = VIOLATION
    witness = None
    detail = ""
    if status == EQUALITY:
        pyr = pyramid_equality_check(k, h)
        witness = pyr.witness
        detail = f"pyramid verdict: {pyr.status}"
    return CheckReport(
        "grunbaum", status,
        (("cut_volume", vol_cut), ("volume", volume(k))),
        bound, witness, detail,
    )


def pyramid_equality_check(k: VPolytope, h: HalfSpace) -> CheckReport:
    """Decides whether K is a pyramid over a base spanning a hyperplane
    parallel to the boundary of H, with the apex strictly inside H. That is
    exactly the equality case of the halfspace cut bound, and the two
    verdicts are cross-checked on every invocation."""
    b = barycenter(k)
    if not h.boundary_contains(b):
        return CheckReport("pyramid-equality", NOT_APPLICABLE,
                           detail="cut hyperplane does not pass through the barycenter")
    heights = [dot(h.normal, v) for v in k.vertices]
    apex = None
    for i, hv in enumerate(heights):
        others = [x for j, x in enumerate(heights) if j != i]
        if len(set(others)) == 1 and others[0] != hv and hv < h.offset:
            apex = i
            break
    is_pyramid = apex is not None
    vol_cut, bound = _cut_margin(k, h)
    if is_pyramid != (vol_cut == bound):
        raise AssertionError(
            "pyramid characterization disagrees with exact cut volume")
    if is_pyramid:
        base_height = next(x for j, x in enumerate(heights) if j != apex)
        return CheckReport(
            "pyramid-equality", EQUALITY,
            (("apex", k.vertices[apex]), ("base_height", base_height),
             ("cut_volume", vol_cut)),
            bound, k.vertices[apex],
        )
    return CheckReport(
        "pyramid-equality", STRICT,
        (("cut_volume", vol_cut),), bound,
    )


# ---------------------------------------------------------------------------
# orthant normalization map and the inequality chain
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class OrthantMap:
    """Affine map built from n facets through a chosen vertex of P = dual(Q),
    labeled by the corresponding vertices of Q: sends the vertex to the
    origin and P into the nonnegative orthant, with |det| >= 1."""

    vertex: Vec
    facet_labels: tuple[IntVec, ...]
    map: RationalAffineMap
    det: Fraction


def _facet_label(normal: IntVec, offset: Fraction) -> Vec:
    # facet <a,x> <= c of the dual comes from <l,x> >= -1 with l = -a/c
    return vscale(-1 / offset, vec(normal))


def orthant_map(p: VPolytope, q: VPolytope, v: Sequence) -> OrthantMap:
    """Deterministic selection: facets through v in canonical order, first
    n-subset whose labels span the space."""
    if p != dual_polytope(q):
        raise PreconditionError("first argument must be the dual of the second")
    v = vec(v)
    if v not in p.vertices:
        raise PreconditionError("chosen point is not a vertex of the dual")
    n = p.dim
    facets = v_to_h(p).facets
    labels = {}
    qverts = set(q.vertices)
    for a, c in facets:
        label = _facet_label(a, c)
        assert label in qverts, "facet does not match a vertex of the source"
        labels[(a, c)] = label
    through = [(a, c) for a, c in facets if dot(a, v) == c]
    for combo in combinations(range(len(through)), n):
        rows = tuple(labels[through[i]] for i in combo)
        try:
            f = RationalAffineMap(rows, ones_vec(n))
        except SingularMap:
            continue
        m = OrthantMap(v, tuple(tuple(int(x) for x in r) for r in rows), f, f.det)
        assert f.apply(v) == zero_vec(n)
        assert all(all(x >= 0 for x in f.apply(w)) for w in p.vertices)
        assert abs(m.det) >= 1
        return m
    raise NoSpanningSelection("no n facets through the vertex span the space")


_STEP_NAMES = ("determinant", "cut-bound", "monotonicity", "corner-simplex")


@dataclass(frozen=True)
class ChainTrace:
    """Exact values of the bound chain at one vertex of the dual:
    vol(K) <= |det| vol(K) = vol(fK);
    (n/(n+1))^n vol(fK) <= vol(fK cap C) <= vol(fP cap C) <= n^n/n!
    where C = {<1,x> <= n}; together they force vol(K) <= (n+1)^n/n!."""

    vertex: Vec
    vol_body: Fraction
    det_abs: Fraction
    vol_image: Fraction
    cut_term: Fraction
    vol_image_cap: Fraction
    vol_dual_cap: Fraction
    vol_corner: Fraction
    bound: Fraction
    step_status: tuple[str, ...]

    def chain_values(self) -> tuple[Fraction, ...]:
        return (self.vol_body, self.det_abs, self.vol_image, self.cut_term,
                self.vol_image_cap, self.vol_dual_cap, self.vol_corner,
                self.bound)

    @property
    def all_equalities(self) -> bool:
        return all(s == EQUALITY for s in self.step_status)


@dataclass(frozen=True)
class ProofTrace:
    body: VPolytope
    dual: VPolytope
    chains: tuple[ChainTrace, ...]
    bound: Fraction

    @property
    def all_equalities(self) -> bool:
        return all(c.all_equalities for c in self.chains)

    @property
    def any_strict(self) -> bool:
        return any(s == STRICT for c in self.chains for s in c.step_status)


def proof_trace(k: VPolytope, q: VPolytope) -> ProofTrace:
    """Evaluates the full exact chain at every vertex of P = dual(Q) and
    machine-checks that each step holds and that together they imply the
    final volume bound."""
    p = dual_polytope(q)
    n = k.dim
    if not is_zero(barycenter(k)):
        raise PreconditionError("body must have barycenter at the origin")
    hp = v_to_h(p)
    if not all(contains(hp, v) for v in k.vertices):
        raise PreconditionError("body must be contained in the dual polytope")
    vol_k = volume(k)
    bound = classical_bound(n)
    coeff = Fraction(n, n + 1) ** n
    vol_corner = Fraction(n**n, math.factorial(n))
    cap = HalfSpace(ones_vec(n), Fraction(n))
    chains = []
    for v in p.vertices:
        om = orthant_map(p, q, v)
        det_abs = abs(om.det)
        image_k = affine_image(k, om.map)
        vol_image = volume(image_k)
        assert vol_image == det_abs * vol_k, "affine volume scaling broken"
        image_p = affine_image(p, om.map)
        cut_term = coeff * vol_image
        vol_image_cap = region_volume(intersect(v_to_h(image_k), cap))
        vol_dual_cap = region_volume(intersect(v_to_h(image_p), cap))
        steps = (
            _le_status(vol_k, vol_image),
            _le_status(cut_term, vol_image_cap),
            _le_status(vol_image_cap, vol_dual_cap),
            _le_status(vol_dual_cap, vol_corner),
        )
        if VIOLATION in steps:
            raise AssertionError("chain inequality violated; kernel bug")
        assert vol_k <= bound, "chain held but final bound failed"
        chains.append(ChainTrace(v, vol_k, det_abs, vol_image, cut_term,
                                 vol_image_cap, vol_dual_cap, vol_corner,
                                 bound, steps))
    return ProofTrace(k, p, tuple(chains), bound)


def _le_status(lhs: Fraction, rhs: Fraction) -> str:
    if lhs < rhs:
        return STRICT
    if lhs == rhs:
        return EQUALITY
    return VIOLATION


# ---------------------------------------------------------------------------
# equality certification
# ---------------------------------------------------------------------------


def certify_equality(k: VPolytope) -> UnimodularAffineMap | None:
    """If n! vol(K) R(K)^n equals (n+1)^n exactly, returns a verified affine
    lattice automorphism onto (n+1) * conv(0, e_1, ..., e_n); otherwise None.

    A failure to certify when the volumes match raises
    CertificationContradiction: for bodies contained in the dual of a
    lattice polytope that would contradict the classified equality case.
    """
    n = k.dim
    if interior_lattice_points(k) != (_origin(n),):
        raise PreconditionError("interior lattice points must be exactly the origin")
    res = r_invariant(k)
    vol = volume(k)
    if vol * res.value**n * math.factorial(n) != Fraction((n + 1) ** n):
        return None
    shrunk = shrink_to_barycenter(k)
    witness = is_multiple_of_unimodular_simplex(shrunk, n + 1)
    if witness is None:
        raise CertificationContradiction(
            "volume matches the bound but the shrunk body is not a unimodular "
            "copy of the extremal simplex")
    if shrunk != k:
        raise CertificationContradiction(
            "volume matches the bound with nonzero barycenter; the body cannot "
            "be extremal")
    return witness
