"""Exact Welschinger invariants of the plane and the ellipsoid quadrics.

The invariant chi^d_r is a signed count of real rational curves of degree d
through r real points and the complementary number of conjugate point pairs.
This package computes it by enumerating the decorated trees that encode
two-stage limits of such curves under neck stretching along a real
Lagrangian (RP^2, S^2 or S^3), and combining curated relative curve counts
on ruled surfaces with open invariants of cotangent bundles.  Everything is
arbitrary-precision integer arithmetic; there is no floating point anywhere.
"""

from .assembly import (
    ChiPolynomial,
    ChiResult,
    CongruenceReport,
    LedgerRow,
    LowerBoundReport,
    SignReport,
    admissible_real_counts,
    check_congruence,
    check_sign_law,
    chi,
    chi_polynomial,
    lower_bound_report,
)
from .contact import (
    ContactVector,
    GeometryKind,
    LagrangianKind,
    deformation_dimension,
    degree_expected,
    double_point_bound,
    f_point_count,
    fredholm_index,
    genus_smooth,
    intersection_bound,
    maslov_cotangent,
)
from .cotangent import (
    FDerivation,
    FInvariantEngine,
    FKey,
    basis_f_engine,
    builtin_f_engine,
    f_invariant,
    reduce_pair_to_real,
    reduce_real_pair_to_cross,
)
from .errors import (
    DimensionMismatch,
    EmptyBeta,
    InadmissiblePair,
    InsufficientRealPoints,
    InvalidDegreeRealPair,
    NegativeDimension,
    TorusPrescribedOrbit,
    UnknownInvariant,
    UnresolvableFKey,
    WelschingerError,
)
from .relative import (
    RelativeInvariantTable,
    RelativeKey,
    RuledSurfaceClass,
    builtin_relative_table,
    n_three,
    point_count,
    quadric_count,
)
from .trees import (
    DecoratedTree,
    TreeClass,
    TreeFamily,
    TreeWithCount,
    assignment_count,
    canonical_form,
    enumerate_decorated_trees,
    enumerate_trees,
    m1_minus,
    m1_plus,
    m2_reconnection,
    multiplicity,
)
from .verification import run_all

__version__ = "0.1.0"

__all__ = [
    "ChiPolynomial",
    "ChiResult",
    "CongruenceReport",
    "ContactVector",
    "DecoratedTree",
    "DimensionMismatch",
    "EmptyBeta",
    "FDerivation",
    "FInvariantEngine",
    "FKey",
    "GeometryKind",
    "InadmissiblePair",
    "InsufficientRealPoints",
    "InvalidDegreeRealPair",
    "LagrangianKind",
    "LedgerRow",
    "LowerBoundReport",
    "NegativeDimension",
    "RelativeInvariantTable",
    "RelativeKey",
    "RuledSurfaceClass",
    "SignReport",
    "TorusPrescribedOrbit",
    "TreeClass",
    "TreeFamily",
    "TreeWithCount",
    "UnknownInvariant",
    "UnresolvableFKey",
    "WelschingerError",
    "admissible_real_counts",
    "assignment_count",
    "basis_f_engine",
    "builtin_f_engine",
    "builtin_relative_table",
    "canonical_form",
    "check_congruence",
    "check_sign_law",
    "chi",
    "chi_polynomial",
    "deformation_dimension",
    "degree_expected",
    "double_point_bound",
    "enumerate_decorated_trees",
    "enumerate_trees",
    "f_invariant",
    "f_point_count",
    "fredholm_index",
    "genus_smooth",
    "intersection_bound",
    "lower_bound_report",
    "m1_minus",
    "m1_plus",
    "m2_reconnection",
    "maslov_cotangent",
    "multiplicity",
    "n_three",
    "point_count",
    "quadric_count",
    "reduce_pair_to_real",
    "reduce_real_pair_to_cross",
    "run_all",
]
