"""圆盘几何：点类型、自同构、距离、极限圆与 Stolz 区域"""

from hyperjulia.geometry.disk import (
    BoundaryPoint,
    DiskPoint,
    Horocycle,
    StolzRegion,
    as_complex,
    automorphism,
    conditioning,
    gamma,
    gamma_inverse,
    horocycle_contains,
    horocycle_euclidean,
    horocycle_functional,
    inverse_automorphism,
    mobius_disk_image,
    phi,
    poincare_distance,
    pseudo_distance,
    sample_circle,
    sample_disk,
    stolz_contains,
    stolz_ratio,
)

__all__ = [
    "BoundaryPoint",
    "DiskPoint",
    "Horocycle",
    "StolzRegion",
    "as_complex",
    "automorphism",
    "conditioning",
    "gamma",
    "gamma_inverse",
    "horocycle_contains",
    "horocycle_euclidean",
    "horocycle_functional",
    "inverse_automorphism",
    "mobius_disk_image",
    "phi",
    "poincare_distance",
    "pseudo_distance",
    "sample_circle",
    "sample_disk",
    "stolz_contains",
    "stolz_ratio",
]
