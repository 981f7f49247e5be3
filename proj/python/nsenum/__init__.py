"""Normal surface enumeration, worst-case constructions and census tools."""

from ._nsenum import (
    ConstructionError,
    InconsistentVector,
    ParseError,
    ResourceLimitExceeded,
    Triangulation,
    TriangulationError,
    boundary_equalizers,
    census,
    census_stats,
    enumerate,
    euler_char,
    fibonacci,
    four_block,
    generate_closed,
    hass_bound,
    is_admissible,
    pillow,
    s2xs1,
    sigma,
    theorem_bound,
    verify,
    worst_case_sigma,
    x_k,
)

__all__ = [
    "ConstructionError",
    "InconsistentVector",
    "ParseError",
    "ResourceLimitExceeded",
    "Triangulation",
    "TriangulationError",
    "boundary_equalizers",
    "census",
    "census_stats",
    "enumerate",
    "euler_char",
    "fibonacci",
    "four_block",
    "generate_closed",
    "hass_bound",
    "is_admissible",
    "pillow",
    "s2xs1",
    "sigma",
    "theorem_bound",
    "verify",
    "worst_case_sigma",
    "x_k",
]
