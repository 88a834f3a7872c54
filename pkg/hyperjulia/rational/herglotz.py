"""Herglotz 型构造：在给定边界点取值 1、次数为 n+d 的 Blaschke 乘积。

h = (2B + (1-B)S)/(2 + (1-B)S)，S(z) = Σ a_j(σ_j + z)/(σ_j - z)，
在公分母 ∏(σ_j - z) 上以精确多项式运算构造，随后做边界模长与零点计数认证。
"""

from __future__ import annotations

import logging
from collections.abc import Sequence

import numpy as np

from hyperjulia.errors import CERTIFICATION_FAILED, PRECONDITION_FAILED, EngineError
from hyperjulia.geometry.disk import PointLike, as_complex
from hyperjulia.rational.blaschke import BlaschkeProduct
from hyperjulia.rational.polynomial import Polynomial, RationalMap
from hyperjulia.rational.roots import count_inside, polynomial_roots

logger = logging.getLogger("hyperjulia")

_BOUNDARY_SAMPLES = 100
_BOUNDARY_TOL = 1e-8


def herglotz_blaschke(
    sigmas: Sequence[PointLike],
    weights: Sequence[float],
    B: BlaschkeProduct,
) -> RationalMap:
    """
    构造 h 并认证其为 n+d 次 Blaschke 乘积。
    - σ_j 两两不同，a_j > 0，B 不恒等于 1，否则 PRECONDITION_FAILED
    - 边界模长偏离 1 超过 1e-8 或圆盘内零点数不等于 n+d → CERTIFICATION_FAILED
    """
    points = [as_complex(s) for s in sigmas]
    n = len(points)
    if n == 0 or n != len(weights):
        raise EngineError(PRECONDITION_FAILED, "sigmas 与 weights 必须非空且长度一致")
    if any(not w > 0 for w in weights):
        raise EngineError(PRECONDITION_FAILED, f"权重必须为正: {list(weights)}")
    for i in range(n):
        for j in range(i + 1, n):
            if abs(points[i] - points[j]) <= 1e-12:
                raise EngineError(PRECONDITION_FAILED, f"σ_{i} 与 σ_{j} 重合")
    if B.degree == 0 and abs(B.phase - 1.0) <= 1e-12:
        raise EngineError(PRECONDITION_FAILED, "B 不能恒等于 1")

    rational = B.to_rational()
    P, Q = rational.numerator, rational.denominator
    factors = [Polynomial((s, -1.0)) for s in points]
    common = Polynomial.constant(1.0)
    for f in factors:
        common = common * f
    herglotz_num = Polynomial(())
    for j, (s, a) in enumerate(zip(points, weights, strict=True)):
        term = Polynomial((s, 1.0)) * float(a)
        for i, f in enumerate(factors):
            if i != j:
                term = term * f
        herglotz_num = herglotz_num + term

    gap = Q - P
    h = RationalMap(P * common * 2.0 + gap * herglotz_num, Q * common * 2.0 + gap * herglotz_num)
    h = h.normalized()

    expected = n + B.degree
    offsets = 2.0 * np.pi * (np.arange(_BOUNDARY_SAMPLES) + 0.5) / _BOUNDARY_SAMPLES + 0.0123
    deviation = float(np.max(np.abs(np.abs(h(np.exp(1j * offsets))) - 1.0)))
    if deviation > _BOUNDARY_TOL:
        raise EngineError(
            CERTIFICATION_FAILED,
            f"Herglotz 构造的边界模长偏离 1: {deviation:.3e}",
        )
    inside = count_inside(polynomial_roots(h.numerator)) if h.numerator.degree >= 1 else 0
    if inside != expected:
        raise EngineError(
            CERTIFICATION_FAILED,
            f"Herglotz 构造的零点计数不符: 期望 {expected}，圆盘内 {inside}",
        )
    logger.debug(f"Herglotz 构造认证通过: 次数 {expected}，边界偏差 {deviation:.3e}")
    return h
