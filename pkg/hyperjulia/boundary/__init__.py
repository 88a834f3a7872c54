"""边界伸缩系数、β 递推与边界不动点"""

from hyperjulia.boundary.chain import BetaChain, beta_chain
from hyperjulia.boundary.dilation import (
    BoundaryDilation,
    DilationMethod,
    beta_exact,
    beta_radial,
    beta_star,
    dilation_for,
    richardson_radial,
)
from hyperjulia.boundary.fixed_points import (
    boundary_fixed_points,
    boundary_solutions,
    fixed_point_condition,
    multiple_fixed_point_sigmas,
)

__all__ = [
    "BetaChain",
    "BoundaryDilation",
    "DilationMethod",
    "beta_chain",
    "beta_exact",
    "beta_radial",
    "beta_star",
    "boundary_fixed_points",
    "boundary_solutions",
    "dilation_for",
    "fixed_point_condition",
    "multiple_fixed_point_sigmas",
    "richardson_radial",
]
