"""Seed-controlled random generators for the property suites.

Polytopes are hulls of uniform rational points on a 1/denominator grid in a
box; degenerate hulls are rejected. The seed comes from the EHRHART_SEED
environment variable when not given explicitly, so suites are reproducible.
"""

from __future__ import annotations

import os
import random
from fractions import Fraction

from .errors import DegenerateInput
from .kernel import HalfSpace, UnimodularAffineMap, VPolytope, barycenter, hull
from .lattice import interior_lattice_points
from .linalg import Vec, identity_mat, vec

DEFAULT_SEED = 20240

_MAX_REJECTS = 10_000


def seed_from_env(default: int = DEFAULT_SEED) -> int:
    raw = os.environ.get("EHRHART_SEED")
    return int(raw) if raw else default


def random_rational_point(rng: random.Random, dim: int,
                          box: int = 2, denominator: int = 64) -> Vec:
    span = box * denominator
    return vec(Fraction(rng.randint(-span, span), denominator) for _ in range(dim))


def random_polytope(rng: random.Random, dim: int, n_points: int | None = None,
                    box: int = 2, denominator: int = 64) -> VPolytope:
    """Hull of n_points uniform rational points, rejecting degenerate hulls."""
    if n_points is None:
        n_points = dim + 4
    for _ in range(_MAX_REJECTS):
        pts = [random_rational_point(rng, dim, box, denominator)
               for _ in range(n_points)]
        try:
            return hull(pts)
        except DegenerateInput:
            continue
    raise RuntimeError("random polytope generation kept degenerating")


def random_polytope_origin_core(rng: random.Random, dim: int,
                                n_points: int | None = None,
                                box: int = 2, denominator: int = 64) -> VPolytope:
    """Random polytope whose interior lattice points are exactly the origin
    (a body with a unique interior lattice point, translated onto it)."""
    for _ in range(_MAX_REJECTS):
        k = random_polytope(rng, dim, n_points, box, denominator)
        ints = interior_lattice_points(k)
        if len(ints) == 1:
            shift = tuple(-c for c in ints[0])
            return k.translate(shift)
    raise RuntimeError("could not hit a unique-interior-point body")


def recentered(k: VPolytope) -> VPolytope:
    """Translate so the barycenter is exactly the origin."""
    b = barycenter(k)
    return k.translate(tuple(-c for c in b))


def random_halfspace_through(rng: random.Random, point: Vec,
                             max_coeff: int = 5) -> HalfSpace:
    """Halfspace whose boundary hyperplane passes through the given point."""
    dim = len(point)
    while True:
        normal = tuple(rng.randint(-max_coeff, max_coeff) for _ in range(dim))
        if any(normal):
            break
    offset = sum(a * x for a, x in zip(normal, vec(point)))
    return HalfSpace(vec(normal), offset)


def random_unimodular_map(rng: random.Random, dim: int, ops: int = 12,
                          shift: int = 4) -> UnimodularAffineMap:
    """Product of random elementary lattice operations plus a translation."""
    m = [list(row) for row in identity_mat(dim)]
    for _ in range(ops):
        kind = rng.randrange(3)
        i = rng.randrange(dim)
        j = rng.randrange(dim)
        if kind == 0 and i != j:
            c = rng.choice([-2, -1, 1, 2])
            for col in range(dim):
                m[i][col] += c * m[j][col]
        elif kind == 1 and i != j:
            m[i], m[j] = m[j], m[i]
        elif kind == 2:
            m[i] = [-x for x in m[i]]
    t = tuple(rng.randint(-shift, shift) for _ in range(dim))
    return UnimodularAffineMap(tuple(tuple(r) for r in m), t)
