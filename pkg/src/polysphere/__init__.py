"""Exact-arithmetic geometry of polyhedral unit spheres.

The package decides face-structure and convexity properties of
finite-dimensional normed spaces whose unit ball is a symmetric polytope,
and verifies or constructs linear extensions of isometries between such
spheres. Everything runs in rational arithmetic; no verdict ever depends
on a floating-point comparison.
"""

from .catalog import (
    CatalogEntry,
    SectionFixture,
    catalog_entries,
    hexagon_space,
    l1_space,
    l1_sum,
    linf_space,
    linf_sum,
    remark_section,
    resolve,
)
from .errors import (
    AsymmetricInputError,
    CertificationError,
    DegenerateInputError,
    DimensionMismatchError,
    EnumerationCapError,
    ExtensionInconsistencyError,
    GeometryError,
    NotAlmostClError,
    NotOnSphereError,
)
from .faces import (
    Face,
    Star,
    face_section,
    facets,
    is_smooth,
    is_star_maximal_convex,
    section_coordinates,
    star,
    subspace_section,
    supporting_functional,
)
from .isometry import (
    ExtensionCertificate,
    IsometryReport,
    NormFormulaVerdict,
    SphereMap,
    extend,
    norm_formula_check,
    transported_functionals,
    verify_isometry,
)
from .lp import (
    INFEASIBLE,
    OPTIMAL,
    UNBOUNDED,
    LpConstraint,
    LpProblem,
    LpSolution,
    solve_lp,
)
from .properties import (
    ClReport,
    ConditionThreeRecord,
    SmoothPointReport,
    TPropertyReport,
    admits_smooth_points,
    check_cl,
    check_t_property,
    cl_decomposition,
    condition_iii_value,
    default_candidates,
    distance_to_hull,
    in_convex_hull,
)
from .sampling import sphere_points
from .space import (
    MAX_ENUM_DIM,
    MAX_FACETS,
    Functional,
    PolyhedralSpace,
    Vector,
    as_fraction,
    dual_space,
    enumerate_ball_vertices,
    from_functionals,
    from_vertices,
    functional,
    norm,
    vector,
)

__version__ = "0.1.0"

__all__ = [
    "AsymmetricInputError",
    "CatalogEntry",
    "CertificationError",
    "ClReport",
    "ConditionThreeRecord",
    "DegenerateInputError",
    "DimensionMismatchError",
    "EnumerationCapError",
    "ExtensionCertificate",
    "ExtensionInconsistencyError",
    "Face",
    "Functional",
    "GeometryError",
    "INFEASIBLE",
    "IsometryReport",
    "LpConstraint",
    "LpProblem",
    "LpSolution",
    "MAX_ENUM_DIM",
    "MAX_FACETS",
    "NormFormulaVerdict",
    "NotAlmostClError",
    "NotOnSphereError",
    "OPTIMAL",
    "PolyhedralSpace",
    "SectionFixture",
    "SmoothPointReport",
    "SphereMap",
    "Star",
    "TPropertyReport",
    "UNBOUNDED",
    "Vector",
    "admits_smooth_points",
    "as_fraction",
    "catalog_entries",
    "check_cl",
    "check_t_property",
    "cl_decomposition",
    "condition_iii_value",
    "default_candidates",
    "distance_to_hull",
    "dual_space",
    "enumerate_ball_vertices",
    "extend",
    "face_section",
    "facets",
    "from_functionals",
    "from_vertices",
    "functional",
    "hexagon_space",
    "in_convex_hull",
    "is_smooth",
    "is_star_maximal_convex",
    "l1_space",
    "l1_sum",
    "linf_space",
    "linf_sum",
    "norm",
    "norm_formula_check",
    "remark_section",
    "resolve",
    "section_coordinates",
    "solve_lp",
    "sphere_points",
    "star",
    "subspace_section",
    "supporting_functional",
    "transported_functionals",
    "vector",
    "verify_isometry",
]
