import sys
from fractions import Fraction as F
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from ehrkit.kernel import VPolytope, cube, hull, standard_simplex


@pytest.fixture(scope="session")
def p2_triangle():
    """Fano triangle conv((1,0),(0,1),(-1,-1))."""
    return hull([(1, 0), (0, 1), (-1, -1)])


@pytest.fixture(scope="session")
def p2_dual():
    """Its dual conv((-1,-1),(2,-1),(-1,2)), the shifted triple simplex."""
    return VPolytope(2, ((-1, -1), (2, -1), (-1, 2)))


@pytest.fixture(scope="session")
def counterexample_body():
    """conv(+-(3/2,1/4), +-(3/2,5/4)); unique interior lattice point 0 but
    not contained in the dual of any lattice polytope."""
    return hull([(F(3, 2), F(1, 4)), (F(3, 2), F(5, 4)),
                 (-F(3, 2), -F(1, 4)), (-F(3, 2), -F(5, 4))])


@pytest.fixture(scope="session")
def cross_polytope():
    return hull([(1, 0), (0, 1), (-1, 0), (0, -1)])


@pytest.fixture(scope="session")
def unit_square():
    return VPolytope(2, ((0, 0), (1, 0), (0, 1), (1, 1)))


@pytest.fixture(scope="session")
def triple_simplex():
    """3 * conv(0, e1, e2)."""
    return standard_simplex(2, 3)


@pytest.fixture(scope="session")
def square2():
    return cube(2)
