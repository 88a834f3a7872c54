"""双曲导数、双曲差商与差商链"""

from hyperjulia.hdq.chain import DeltaChain, delta_chain, next_stage
from hyperjulia.hdq.deflation import deflate
from hyperjulia.hdq.differentiation import (
    central_difference,
    complex_step_derivative,
    contour_taylor,
)
from hyperjulia.hdq.quotient import (
    QuotientValue,
    boundary_hdq,
    boundary_quotient,
    hdq,
    hdq_with_confidence,
    hyperbolic_derivative,
)
from hyperjulia.hdq.selfmap import MapKind, SelfMap, TaylorData
from hyperjulia.hdq.taylor import (
    Delta0Taylor,
    general_delta_derivative,
    taylor_delta0,
    vanishing_order,
)

__all__ = [
    "Delta0Taylor",
    "DeltaChain",
    "MapKind",
    "QuotientValue",
    "SelfMap",
    "TaylorData",
    "boundary_hdq",
    "boundary_quotient",
    "central_difference",
    "complex_step_derivative",
    "contour_taylor",
    "deflate",
    "delta_chain",
    "general_delta_derivative",
    "hdq",
    "hdq_with_confidence",
    "hyperbolic_derivative",
    "next_stage",
    "taylor_delta0",
    "vanishing_order",
]
