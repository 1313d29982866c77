"""Exact rational toolkit for lattice polytopes.

Desk-scale verification of volume bounds for bodies whose unique interior
lattice point is the origin, polar duality and reflexivity machinery,
unimodular normal forms, and the toric Fano dictionary built on top.
"""

from .errors import (
    CertificationContradiction,
    DegenerateInput,
    DimensionUnsupported,
    Empty,
    KernelError,
    NoSpanningSelection,
    NotFano,
    NotLatticePolytope,
    OriginNotInterior,
    ParseError,
    PreconditionError,
    SingularMap,
    Unbounded,
)
from .kernel import (
    HalfSpace,
    HPolytope,
    RationalAffineMap,
    Triangulation,
    UnimodularAffineMap,
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
from .lattice import (
    FacetData,
    FacetLatticeData,
    NormalForm,
    are_equivalent,
    dual_polytope,
    facet_lattice_data,
    interior_lattice_points,
    is_fano,
    is_multiple_of_unimodular_simplex,
    is_reflexive,
    lattice_points,
    normal_form,
    root_symmetry_check,
)
from .checks import (
    ChainTrace,
    OrthantMap,
    ProofTrace,
    RInvariantResult,
    certify_equality,
    classical_bound,
    ehrhart_check,
    grunbaum_check,
    milman_pajor_check,
    minkowski_combined_check,
    orthant_map,
    proof_trace,
    pyramid_equality_check,
    r_invariant,
    shrink_to_barycenter,
)
from .report import CheckReport
from .toric import (
    ToricFanoReport,
    anticanonical_degree,
    is_smooth,
    ke_criterion,
    toric_report,
)

__all__ = [
    "ChainTrace",
    "CheckReport",
    "FacetData",
    "FacetLatticeData",
    "NormalForm",
    "OrthantMap",
    "ProofTrace",
    "RInvariantResult",
    "ToricFanoReport",
    "anticanonical_degree",
    "are_equivalent",
    "certify_equality",
    "classical_bound",
    "dual_polytope",
    "ehrhart_check",
    "empty_hpolytope",
    "facet_lattice_data",
    "grunbaum_check",
    "interior_lattice_points",
    "is_fano",
    "is_multiple_of_unimodular_simplex",
    "is_reflexive",
    "is_smooth",
    "ke_criterion",
    "lattice_points",
    "milman_pajor_check",
    "minkowski_combined_check",
    "normal_form",
    "orthant_map",
    "proof_trace",
    "pyramid_equality_check",
    "r_invariant",
    "root_symmetry_check",
    "shrink_to_barycenter",
    "toric_report",
    "CertificationContradiction",
    "DegenerateInput",
    "DimensionUnsupported",
    "Empty",
    "HalfSpace",
    "HPolytope",
    "KernelError",
    "NoSpanningSelection",
    "NotFano",
    "NotLatticePolytope",
    "OriginNotInterior",
    "ParseError",
    "PreconditionError",
    "RationalAffineMap",
    "SingularMap",
    "Triangulation",
    "Unbounded",
    "UnimodularAffineMap",
    "VPolytope",
    "affine_dim",
    "affine_image",
    "barycenter",
    "contains",
    "cube",
    "h_to_v",
    "hull",
    "intersect",
    "intersect_polytopes",
    "is_empty",
    "region_volume",
    "standard_simplex",
    "triangulate",
    "v_to_h",
    "volume",
]

__version__ = "0.1.0"
