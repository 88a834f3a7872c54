"""有理映射：多项式、有理函数、有限 Blaschke 乘积与求根"""

from hyperjulia.rational.blaschke import (
    BlaschkeProduct,
    blaschke_conjugate,
    blaschke_derivative,
    blaschke_eval,
    rational_to_blaschke,
)
from hyperjulia.rational.herglotz import herglotz_blaschke
from hyperjulia.rational.polynomial import Polynomial, RationalMap
from hyperjulia.rational.roots import count_inside, polynomial_roots

__all__ = [
    "BlaschkeProduct",
    "Polynomial",
    "RationalMap",
    "blaschke_conjugate",
    "blaschke_derivative",
    "blaschke_eval",
    "count_inside",
    "herglotz_blaschke",
    "polynomial_roots",
    "rational_to_blaschke",
]
