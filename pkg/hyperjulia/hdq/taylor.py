"""原点处差商的 Taylor 闭式：Δ₀f(0)、(Δ₀f)^h(0)、(Δ₀f)″(0)、(Δ₀,₀f)^h(0) 等。"""

from __future__ import annotations

import logging
from dataclasses import dataclass

from hyperjulia.config import Config
from hyperjulia.errors import (
    AUTOMORPHISM_DEGENERACY,
    DEGENERATE_VALUE,
    PRECONDITION_FAILED,
    EngineError,
)
from hyperjulia.geometry.disk import PointLike, as_complex
from hyperjulia.hdq.selfmap import SelfMap, TaylorData

logger = logging.getLogger("hyperjulia")


@dataclass(frozen=True)
class Delta0Taylor:
    """分母退化的字段为 None。"""

    delta0: complex
    delta0_h: complex | None
    delta0_second: complex | None
    delta00_h: complex | None


def _degenerate(name: str, strict: bool) -> None:
    if strict:
        raise EngineError(AUTOMORPHISM_DEGENERACY, f"{name} 的分母 1-|·|² 退化")
    logger.debug(f"{name} 分母退化，记为未定义")


def taylor_delta0(data: TaylorData, *, strict: bool | None = None) -> Delta0Taylor:
    """
    由 f(0), f'(0), f″(0), f‴(0) 计算原点处的差商数据。
    - |f(0)| >= 1 - 1e-12 总是报错
    - 其余分母退化时对应字段为 None，strict=True 时报错；缺省取 Config().STRICT_TAYLOR
    """
    if strict is None:
        strict = Config().STRICT_TAYLOR
    if data.m < 3:
        raise EngineError(PRECONDITION_FAILED, f"需要至少三阶导数，实际 m = {data.m}")
    if abs(data.point) > 0:
        raise EngineError(PRECONDITION_FAILED, f"Taylor 数据必须取在原点，实际 {data.point}")
    tol = Config().DEGENERATE_TOL
    f0, f1, f2, f3 = data.coefficients[:4]

    den0 = 1.0 - abs(f0) ** 2
    if den0 < tol:
        raise EngineError(AUTOMORPHISM_DEGENERACY, f"|f(0)| = {abs(f0)} 已到达边界")
    fh = f1 / den0

    den1 = 1.0 - abs(fh) ** 2
    f0c = f0.conjugate()
    second = (f3 / 3.0 + 2.0 * f0c * fh * f2 + 2.0 * f0c**2 * fh**2 * f1) / den0
    if den1 < tol:
        _degenerate("(Δ₀f)^h(0)", strict)
        return Delta0Taylor(fh, None, second, None)
    delta_h = (f2 / (2.0 * den0) + f0c * fh**2) / den1

    den2 = 1.0 - abs(delta_h) ** 2
    if den2 < tol:
        _degenerate("(Δ₀,₀f)^h(0)", strict)
        return Delta0Taylor(fh, delta_h, second, None)
    delta00_h = (second / (2.0 * den1) + fh.conjugate() * delta_h**2) / den2
    return Delta0Taylor(fh, delta_h, second, delta00_h)


def general_delta_derivative(f: SelfMap, w0: PointLike) -> complex:
    """(Δ_{w₀}f)^h(0)；w₀ = 0 时转到 taylor_delta0。"""
    w = as_complex(w0)
    tol = Config().DEGENERATE_TOL
    if w == 0:
        value = taylor_delta0(f.taylor(0j, 3), strict=True).delta0_h
        assert value is not None
        return value

    a, b, f1 = f(0j), f(w), f.derivative(0j)
    q = 1.0 - b.conjugate() * a
    if abs(q) < tol:
        raise EngineError(DEGENERATE_VALUE, f"1 - f(w₀)̄f(0) 退化，w₀ = {w}")
    delta_at_0 = (b - a) / (w * q)
    den = 1.0 - abs(delta_at_0) ** 2
    if den < tol:
        raise EngineError(AUTOMORPHISM_DEGENERACY, f"|Δ_w₀f(0)| 已到达边界，w₀ = {w}")
    first = (b - a - f1 * w) / w**2 / q
    second = (b - a) / w * (b.conjugate() * f1 - w.conjugate() * q) / q**2
    return (first + second) / den


def vanishing_order(f: SelfMap, z0: PointLike, *, max_order: int = 8, tol: float = 1e-8) -> int:
    """f - z₀ 在 z₀ 处的零点阶数；f(z₀) ≠ z₀ 时返回 0。"""
    zv = as_complex(z0)
    data = f.taylor(zv, max_order)
    if abs(data.coefficients[0] - zv) > tol:
        return 0
    for n in range(1, max_order + 1):
        if abs(data.taylor_coefficient(n)) > tol:
            return n
    raise EngineError(
        PRECONDITION_FAILED,
        f"{f.name} - z₀ 在 z₀ = {zv} 处前 {max_order} 阶系数全部为零",
    )
