"""引理校验：每个检查返回 VerificationReport，lhs <= rhs 即成立。"""

from hyperjulia.lemmas.bounds import (
    check_basso,
    check_lower_bound,
    lower_bound_ladder,
    lower_bound_series,
    lower_bound_simplified,
)
from hyperjulia.lemmas.cowen_pommerenke import (
    check_corollary_CP,
    check_proposition_2CP,
    check_proposition_CPn,
    cowen_pommerenke,
    cowen_pommerenke_multiple,
)
from hyperjulia.lemmas.julia import (
    check_2p_jwc,
    check_horocycle_image,
    check_julia,
    check_jwc,
    check_multipoint_julia,
    check_schwarz_pick,
    check_two_point_julia,
    finite_dilation,
    radial_limit,
)
from hyperjulia.lemmas.mercer import MercerDisk, check_mercer, mercer_disk
from hyperjulia.lemmas.report import build_report, encode, radial_widen

__all__ = [
    "MercerDisk",
    "build_report",
    "check_2p_jwc",
    "check_basso",
    "check_corollary_CP",
    "check_horocycle_image",
    "check_julia",
    "check_jwc",
    "check_lower_bound",
    "check_mercer",
    "check_multipoint_julia",
    "check_proposition_2CP",
    "check_proposition_CPn",
    "check_schwarz_pick",
    "check_two_point_julia",
    "cowen_pommerenke",
    "cowen_pommerenke_multiple",
    "encode",
    "finite_dilation",
    "lower_bound_ladder",
    "lower_bound_series",
    "lower_bound_simplified",
    "mercer_disk",
    "radial_limit",
]
