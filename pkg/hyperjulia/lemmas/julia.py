"""Julia 型不等式：经典、极限圆像、两点、多点、多点 Schwarz–Pick 与径向 JWC。"""

from __future__ import annotations

import logging
import math

import numpy as np

from hyperjulia.boundary.chain import BetaChain, beta_chain
from hyperjulia.boundary.dilation import BoundaryDilation, dilation_for, richardson_radial
from hyperjulia.config import Config
from hyperjulia.errors import DEGENERATE_VALUE, PRECONDITION_FAILED, EngineError
from hyperjulia.geometry.disk import (
    BoundaryPoint,
    DiskPoint,
    PointLike,
    as_complex,
    conditioning,
    horocycle_functional,
    poincare_distance,
)
from hyperjulia.hdq.chain import DeltaChain, delta_chain
from hyperjulia.hdq.selfmap import SelfMap
from hyperjulia.lemmas.report import build_report, radial_widen
from hyperjulia.result.models import VerificationReport

logger = logging.getLogger("hyperjulia")

# 径向极限与期望值的允许偏差 (外推增量另计)
RADIAL_LIMIT_TOL = 1e-5


def finite_dilation(
    f: SelfMap, sigma: PointLike, dilation: BoundaryDilation | None = None
) -> BoundaryDilation:
    """取 σ 处的 β，要求有限且 τ 已知。"""
    dil = dilation if dilation is not None else dilation_for(f, sigma)
    if not dil.is_finite or dil.tau is None:
        raise EngineError(PRECONDITION_FAILED, f"{f.name} 在 σ = {as_complex(sigma)} 处 β 无穷")
    return dil


def reject_automorphism(f: SelfMap) -> None:
    if f.is_automorphism:
        raise EngineError(PRECONDITION_FAILED, f"{f.name} 是圆盘自同构，不满足前提")


def _interior(f: SelfMap, z: complex) -> complex:
    fz = f(z)
    if abs(fz) >= 1.0 - Config().DEGENERATE_TOL:
        raise EngineError(DEGENERATE_VALUE, f"{f.name} 在 z = {z} 处取值到达边界")
    return fz


def check_julia(
    f: SelfMap,
    sigma: PointLike,
    tau: PointLike,
    beta: float,
    z: PointLike,
    *,
    confidence: float = 0.0,
) -> VerificationReport:
    """|τ-f(z)|²/(1-|f(z)|²) <= β|σ-z|²/(1-|z|²)，等号当且仅当 f 为自同构。"""
    s, t = BoundaryPoint(as_complex(sigma)).value, BoundaryPoint(as_complex(tau)).value
    zv = DiskPoint(as_complex(z)).value
    fz = _interior(f, zv)
    lhs = abs(t - fz) ** 2 / (1.0 - abs(fz) ** 2)
    rhs = beta * horocycle_functional(s, zv)
    return build_report(
        "julia",
        lhs,
        rhs,
        equality_expected=f.is_automorphism,
        inputs={"map": f.describe(), "sigma": s, "tau": t, "beta": beta, "z": zv},
        widen=radial_widen(confidence, beta, rhs),
        conditioning=conditioning(zv),
    )


def check_horocycle_image(
    f: SelfMap,
    sigma: PointLike,
    tau: PointLike,
    beta: float,
    R: float,
    samples: int = 1000,
    *,
    confidence: float = 0.0,
) -> VerificationReport:
    """在 ∂E(σ, R) 上采样，检查 f(z) ∈ E(τ, βR) 的闭包；lhs 取最坏的极限圆泛函值。"""
    if not R > 0:
        raise EngineError(PRECONDITION_FAILED, f"极限圆半径必须为正: R = {R}")
    s, t = BoundaryPoint(as_complex(sigma)).value, BoundaryPoint(as_complex(tau)).value
    rho = R / (R + 1.0)
    center = s * (1.0 - rho)
    # 相位错开半步以避开切点 σ
    angles = np.angle(s) + 2.0 * np.pi * (np.arange(samples) + 0.5) / samples
    points = center + rho * np.exp(1j * angles)
    values = f(points)
    functional = np.abs(t - values) ** 2 / (1.0 - np.abs(values) ** 2)
    worst = int(np.argmax(functional))
    rhs = beta * R
    return build_report(
        "horocycle_image",
        float(functional[worst]),
        rhs,
        equality_expected=f.is_automorphism,
        inputs={
            "map": f.describe(),
            "sigma": s,
            "tau": t,
            "beta": beta,
            "R": R,
            "samples": samples,
        },
        widen=radial_widen(confidence, beta, rhs),
        conditioning=conditioning(complex(points[worst])),
        diagnostic=f"worst sample {complex(points[worst])!r}",
    )


def check_multipoint_julia(
    chain: DeltaChain,
    bchain: BetaChain,
    z: PointLike,
    *,
    name: str = "multipoint_julia",
) -> VerificationReport:
    """
    在最终阶段 g = Δ_{w_k..w_1}f 上：
    |g(σ) - g(z)|²/(1-|g(z)|²) <= β_g(σ)|σ-z|²/(1-|z|²)，等号当且仅当 f ∈ ℬ_{k+1}。
    """
    k = chain.k
    if k < 1:
        raise EngineError(PRECONDITION_FAILED, "多点 Julia 引理要求链长 k >= 1")
    zv = DiskPoint(as_complex(z)).value
    g = chain.final
    gz = _interior(g, zv)
    s = bchain.sigma.value
    lhs = abs(bchain.boundary_values[k] - gz) ** 2 / (1.0 - abs(gz) ** 2)
    rhs = bchain.betas[k] * horocycle_functional(s, zv)
    return build_report(
        name,
        lhs,
        rhs,
        equality_expected=chain.base.blaschke_degree_is(k + 1),
        inputs={
            "map": chain.base.describe(),
            "sigma": s,
            "points": list(chain.points),
            "z": zv,
            "beta": bchain.beta,
        },
        widen=radial_widen(bchain.confidence, bchain.beta, rhs),
        conditioning=conditioning(zv),
    )


def check_two_point_julia(
    f: SelfMap,
    sigma: PointLike,
    z: PointLike,
    w: PointLike,
    *,
    dilation: BoundaryDilation | None = None,
) -> VerificationReport:
    """两点 Julia 引理，即 k = 1 的多点形式；等号当且仅当 f ∈ ℬ₂。"""
    reject_automorphism(f)
    dil = finite_dilation(f, sigma, dilation)
    chain = delta_chain(f, (w,))
    return check_multipoint_julia(chain, beta_chain(chain, sigma, dil), z, name="two_point_julia")


def check_schwarz_pick(chain: DeltaChain, z: PointLike, w: PointLike) -> VerificationReport:
    """最终阶段的 Poincaré 距离压缩 ω(g(z), g(w)) <= ω(z, w)。"""
    zv, wv = DiskPoint(as_complex(z)).value, DiskPoint(as_complex(w)).value
    g = chain.final
    gz, gw = _interior(g, zv), _interior(g, wv)
    lhs = poincare_distance(gz, gw)
    rhs = poincare_distance(zv, wv)
    return build_report(
        "schwarz_pick",
        lhs,
        rhs,
        equality_expected=chain.base.blaschke_degree_is(chain.k + 1),
        inputs={"map": chain.base.describe(), "points": list(chain.points), "z": zv, "w": wv},
        conditioning=max(conditioning(zv), conditioning(wv)),
    )


def radial_limit(values: list[complex]) -> tuple[complex, float]:
    """复值序列按 r_m = 1 - 2^{-m} 外推，实部虚部分别处理；返回 (极限, 增量)。"""
    re, re_inc = richardson_radial([v.real for v in values])
    im, im_inc = richardson_radial([v.imag for v in values])
    return complex(re, im), math.hypot(re_inc, im_inc)


def _radii() -> list[float]:
    cfg = Config()
    return [1.0 - 2.0**-m for m in range(cfg.RADIAL_M_MIN, cfg.RADIAL_FIT_M_MAX + 1)]


def check_jwc(
    f: SelfMap,
    sigma: PointLike,
    *,
    dilation: BoundaryDilation | None = None,
) -> VerificationReport:
    """径向 Julia–Wolff–Carathéodory：f'(rσ) → τσ̄β；lhs 为偏差，rhs 为允许误差。"""
    s = BoundaryPoint(as_complex(sigma)).value
    dil = finite_dilation(f, s, dilation)
    assert dil.tau is not None
    expected = dil.tau.value * s.conjugate() * dil.beta
    limit, increment = radial_limit([f.derivative(r * s) for r in _radii()])
    lhs = abs(limit - expected)
    rhs = RADIAL_LIMIT_TOL * max(1.0, abs(expected)) + increment + dil.confidence
    logger.debug(f"JWC 径向极限 {limit}, 期望 {expected}, 增量 {increment:.3e}")
    return build_report(
        "jwc",
        lhs,
        rhs,
        equality_expected=None,
        inputs={"map": f.describe(), "sigma": s, "beta": dil.beta, "limit": limit},
    )


def check_2p_jwc(
    f: SelfMap,
    sigma: PointLike,
    w: PointLike,
    *,
    dilation: BoundaryDilation | None = None,
) -> VerificationReport:
    """
    g = f*(·, w) 在 σ 处的两个径向极限：差商 (g(σ) - g(rσ))/(σ - rσ) 与导数 g'(rσ)，
    均应趋于 g(σ)σ̄β*_f(σ; w)。lhs 取两者中较大的偏差。
    """
    reject_automorphism(f)
    s = BoundaryPoint(as_complex(sigma)).value
    dil = finite_dilation(f, s, dilation)
    chain = delta_chain(f, (w,))
    bchain = beta_chain(chain, s, dil)
    g = chain.final
    g_sigma = bchain.boundary_values[1]
    expected = g_sigma * s.conjugate() * bchain.betas[1]

    radii = _radii()
    quotient, q_inc = radial_limit([(g_sigma - g(r * s)) / (s - r * s) for r in radii])
    derivative, d_inc = radial_limit([g.derivative(r * s) for r in radii])
    lhs = max(abs(quotient - expected), abs(derivative - expected))
    rhs = RADIAL_LIMIT_TOL * max(1.0, abs(expected)) + max(q_inc, d_inc) + dil.confidence
    return build_report(
        "two_point_jwc",
        lhs,
        rhs,
        equality_expected=None,
        inputs={
            "map": f.describe(),
            "sigma": s,
            "w": as_complex(w),
            "beta_star": bchain.betas[1],
            "quotient_limit": quotient,
            "derivative_limit": derivative,
        },
    )
