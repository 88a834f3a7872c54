"""双曲导数与双曲差商 f^h、f*(z, w)，以及边界点上的差商。"""

from __future__ import annotations

import logging
from dataclasses import dataclass

from hyperjulia.config import Config
from hyperjulia.errors import DEGENERATE_VALUE, EngineError
from hyperjulia.geometry.disk import BoundaryPoint, PointLike, as_complex, gamma
from hyperjulia.hdq.deflation import deflate
from hyperjulia.hdq.selfmap import SelfMap

logger = logging.getLogger("hyperjulia")


@dataclass(frozen=True)
class QuotientValue:
    """差商值及其求值分支：exact / quotient / coincident。"""

    value: complex
    branch: str
    low_confidence: bool = False


def hyperbolic_derivative(f: SelfMap, z: PointLike) -> complex:
    """f^h(z) = f'(z)(1-|z|²)/(1-|f(z)|²)。"""
    zv = as_complex(z)
    fz = f(zv)
    if abs(fz) >= 1.0 - Config().DEGENERATE_TOL:
        raise EngineError(
            DEGENERATE_VALUE,
            f"{f.name} 在 z = {zv} 处取值到达边界: |f(z)| = {abs(fz)}",
        )
    return f.derivative(zv) * (1.0 - abs(zv) ** 2) / (1.0 - abs(fz) ** 2)


def hdq_with_confidence(f: SelfMap, z: PointLike, w: PointLike) -> QuotientValue:
    zv, wv = as_complex(z), as_complex(w)
    cfg = Config()
    if f.rational is not None:
        stage = deflate(f.rational, wv, unimodular=f.blaschke_degree is not None)
        return QuotientValue(stage(zv), "exact")

    distance = abs(gamma(wv, zv))
    if distance < cfg.COINCIDENCE_THRESHOLD:
        return QuotientValue(hyperbolic_derivative(f, zv), "coincident")
    fw = f(wv)
    if abs(fw) >= 1.0 - cfg.DEGENERATE_TOL:
        raise EngineError(DEGENERATE_VALUE, f"{f.name} 在 w = {wv} 处取值到达边界")
    value = gamma(fw, f(zv)) / gamma(wv, zv)
    low = distance < cfg.LOW_CONFIDENCE_THRESHOLD
    if low:
        logger.debug(f"差商低置信度: |γ_w(z)| = {distance:.3e}, z = {zv}, w = {wv}")
    return QuotientValue(value, "quotient", low)


def hdq(f: SelfMap, z: PointLike, w: PointLike) -> complex:
    """f*(z, w) = γ_{f(w)}(f(z))/γ_w(z)；精确有理映射走消根形式，对全部 z 有效。"""
    return hdq_with_confidence(f, z, w).value


def boundary_quotient(u: complex, v: complex, sigma: complex, w: complex) -> complex:
    """|u| = |σ| = 1 时 γ_v(u)/γ_w(σ) 的代数形式 ū σ (u-v)/(ū-v̄)·(σ̄-w̄)/(σ-w)。"""
    den = (u.conjugate() - v.conjugate()) * (sigma - w)
    if abs(den) < Config().DEGENERATE_TOL:
        raise EngineError(
            DEGENERATE_VALUE,
            f"边界差商退化: f(σ) = {u} 与 f(w) = {v} 数值重合",
        )
    return u.conjugate() * sigma * (u - v) * (sigma.conjugate() - w.conjugate()) / den


def boundary_hdq(
    f: SelfMap,
    sigma: PointLike,
    f_sigma: PointLike | None,
    w: PointLike,
) -> BoundaryPoint:
    """f*(σ, w)，|f*(σ, w)| = 1；f_sigma 缺省时取精确映射在 σ 处的值。"""
    s = BoundaryPoint(as_complex(sigma)).value
    u = BoundaryPoint(as_complex(f_sigma) if f_sigma is not None else f(s)).value
    wv = as_complex(w)
    return BoundaryPoint(boundary_quotient(u, f(wv), s, wv))
