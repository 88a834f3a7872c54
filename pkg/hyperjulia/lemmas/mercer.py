"""两点 Julia 引理的欧氏形式：f(z) 落在圆盘 |ζ - c_w(z)| < r_w(z) 内。"""

from __future__ import annotations

from dataclasses import dataclass

from hyperjulia.boundary.chain import beta_chain
from hyperjulia.boundary.dilation import BoundaryDilation
from hyperjulia.config import Config
from hyperjulia.errors import DEGENERATE_VALUE, EngineError
from hyperjulia.geometry.disk import (
    BoundaryPoint,
    DiskPoint,
    PointLike,
    as_complex,
    conditioning,
    mobius_disk_image,
    phi,
)
from hyperjulia.hdq.chain import delta_chain
from hyperjulia.hdq.selfmap import SelfMap
from hyperjulia.lemmas.julia import finite_dilation, reject_automorphism
from hyperjulia.lemmas.report import build_report
from hyperjulia.result.models import VerificationReport


@dataclass(frozen=True)
class MercerDisk:
    center: complex
    radius: float
    contains: bool
    value: complex
    # φ_{f(w)} 作用于极限圆约束圆盘 D 得到的同一圆盘，用于一致性比对
    image_center: complex
    image_radius: float

    @property
    def distance(self) -> float:
        return abs(self.value - self.center)


def mercer_disk(
    f: SelfMap,
    sigma: PointLike,
    w: PointLike,
    z: PointLike,
    *,
    dilation: BoundaryDilation | None = None,
) -> MercerDisk:
    """
    q = f*(σ,w)·φ_w(z)，a = f(w)，Λ = (1-|z|²)/|σ-z|²，β̂ = β*_f(σ; w)：
    L = (1-|a|²|φ_w(z)|²)/|1-āq|²，s = β̂/(β̂L+Λ)，
    c = q(1-|a|²)/(1-āq)²·s + φ_a(q)，r = |φ_w(z)|(1-|a|²)/|1-āq|²·s。
    """
    reject_automorphism(f)
    s_pt = BoundaryPoint(as_complex(sigma)).value
    wv, zv = DiskPoint(as_complex(w)).value, DiskPoint(as_complex(z)).value
    dil = finite_dilation(f, s_pt, dilation)
    chain = delta_chain(f, (wv,))
    bchain = beta_chain(chain, s_pt, dil)
    beta_hat = bchain.betas[1]
    phi_wz = phi(wv, zv)
    q = bchain.boundary_values[1] * phi_wz
    a = chain.stage_values[0]
    lam = (1.0 - abs(zv) ** 2) / abs(s_pt - zv) ** 2

    den = 1.0 - a.conjugate() * q
    if abs(den) < Config().DEGENERATE_TOL:
        raise EngineError(DEGENERATE_VALUE, f"Mercer 圆盘分母 1 - āq 退化，z = {zv}")
    big_l = (1.0 - abs(a) ** 2 * abs(phi_wz) ** 2) / abs(den) ** 2
    scale = beta_hat / (beta_hat * big_l + lam)
    center = q * (1.0 - abs(a) ** 2) / den**2 * scale + phi(a, q)
    radius = abs(phi_wz) * (1.0 - abs(a) ** 2) / abs(den) ** 2 * scale

    image_center, image_radius = mobius_disk_image(
        lam / (beta_hat + lam) * q, beta_hat / (beta_hat + lam) * abs(phi_wz), a
    )
    value = f(zv)
    return MercerDisk(
        center=center,
        radius=radius,
        contains=abs(value - center) < radius + Config().TOL_CHECK,
        value=value,
        image_center=image_center,
        image_radius=image_radius,
    )


def check_mercer(
    f: SelfMap,
    sigma: PointLike,
    w: PointLike,
    z: PointLike,
    *,
    dilation: BoundaryDilation | None = None,
) -> VerificationReport:
    """lhs = |f(z) - c_w(z)|，rhs = r_w(z)；等号当且仅当 f ∈ ℬ₂。"""
    disk = mercer_disk(f, sigma, w, z, dilation=dilation)
    zv = as_complex(z)
    return build_report(
        "mercer",
        disk.distance,
        disk.radius,
        equality_expected=f.blaschke_degree_is(2),
        inputs={
            "map": f.describe(),
            "sigma": as_complex(sigma),
            "w": as_complex(w),
            "z": zv,
            "center": disk.center,
            "radius": disk.radius,
        },
        conditioning=conditioning(zv),
        diagnostic=(
            f"image disk consistency: center Δ {abs(disk.center - disk.image_center):.3e}, "
            f"radius Δ {abs(disk.radius - disk.image_radius):.3e}"
        ),
    )
