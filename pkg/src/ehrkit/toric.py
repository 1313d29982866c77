"""Dictionary between Fano polytopes and the invariants of their toric
varieties: anticanonical degree, Kähler-Einstein criterion, ray invariant,
and degree bounds with projective-space recognition.

The variety itself is never represented; everything is computed from the
polytope and its dual.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .checks import certify_equality, r_invariant
from .errors import NotFano
from .kernel import UnimodularAffineMap, VPolytope, barycenter, v_to_h, volume
from .lattice import dual_polytope, is_fano, is_reflexive
from .linalg import dot, int_mat_det, is_zero
from .report import EQUALITY, NOT_APPLICABLE, STRICT, VIOLATION


@dataclass(frozen=True)
class ToricFanoReport:
    """Invariants of the toric Fano variety attached to a Fano polytope Q.

    degree = n! vol(Q*); the weighted bound is ((n+1)/R)^n and the plain
    bound (n+1)^n applies when the Kähler-Einstein criterion holds. The
    r_value is the ray invariant of the dual; it equals the variety's
    greatest lower Ricci bound when the variety is smooth.
    """

    polytope: VPolytope
    dual: VPolytope
    degree: Fraction
    ke_exists: bool
    r_value: Fraction
    weighted_bound: Fraction
    plain_bound: Fraction
    weighted_status: str
    plain_status: str
    is_projective_space: bool
    smooth: bool
    witness: UnimodularAffineMap | None

    @property
    def status(self) -> str:
        return self.weighted_status


def _require_fano(q: VPolytope) -> None:
    if not is_fano(q):
        raise NotFano("operation requires a Fano polytope")


def anticanonical_degree(q: VPolytope) -> Fraction:
    """n! times the volume of the dual polytope, exact."""
    _require_fano(q)
    return math.factorial(q.dim) * volume(dual_polytope(q))


def ke_criterion(q: VPolytope) -> bool:
    """The toric variety admits a Kähler-Einstein metric iff the barycenter
    of the dual polytope is the origin."""
    _require_fano(q)
    return is_zero(barycenter(dual_polytope(q)))


def is_smooth(q: VPolytope) -> bool:
    """Every facet of Q is a simplex whose vertices form a lattice basis."""
    _require_fano(q)
    facets = v_to_h(q).facets
    for a, c in facets:
        on = [v for v in q.vertices if dot(a, v) == c]
        if len(on) != q.dim:
            return False
        m = tuple(tuple(int(x) for x in v) for v in on)
        if abs(int_mat_det(m)) != 1:
            return False
    return True


def _compare(value: Fraction, bound: Fraction) -> str:
    if value < bound:
        return STRICT
    if value == bound:
        return EQUALITY
    return VIOLATION


def toric_report(q: VPolytope) -> ToricFanoReport:
    """Degree, both bounds with exact statuses, and projective-space
    recognition, cross-checked against the certified equality case."""
    _require_fano(q)
    n = q.dim
    p = dual_polytope(q)
    degree = math.factorial(n) * volume(p)
    if is_reflexive(q):
        assert degree.denominator == 1, "reflexive degree must be an integer"
    res = r_invariant(p)
    ke = is_zero(res.barycenter)
    assert ke == (res.value == 1)
    weighted_bound = Fraction((n + 1) ** n) / res.value**n
    plain_bound = Fraction((n + 1) ** n)
    witness = certify_equality(p)
    ispn = witness is not None
    weighted_status = _compare(degree, weighted_bound)
    plain_status = _compare(degree, plain_bound) if ke else NOT_APPLICABLE
    # equality in either bound characterizes projective space
    assert (weighted_status == EQUALITY) == ispn, "weighted equality mismatch"
    if ke:
        assert (plain_status == EQUALITY) == ispn, "plain equality mismatch"
    assert ispn == (degree == plain_bound and ke)
    return ToricFanoReport(
        polytope=q,
        dual=p,
        degree=degree,
        ke_exists=ke,
        r_value=res.value,
        weighted_bound=weighted_bound,
        plain_bound=plain_bound,
        weighted_status=weighted_status,
        plain_status=plain_status,
        is_projective_space=ispn,
        smooth=is_smooth(q),
        witness=witness,
    )
