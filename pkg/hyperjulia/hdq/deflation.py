"""有理映射的精确差商：γ_{R(w)}∘R / γ_w 通过综合除法消去已知根 w。"""

from __future__ import annotations

import logging

from hyperjulia.config import Config
from hyperjulia.errors import (
    DEFLATION_RESIDUAL,
    DEGENERATE_VALUE,
    DEGREE_EXHAUSTED,
    EngineError,
)
from hyperjulia.rational.polynomial import Polynomial, RationalMap

logger = logging.getLogger("hyperjulia")


def deflate(R: RationalMap, w: complex, *, unimodular: bool) -> RationalMap:
    """
    返回 z ↦ γ_{R(w)}(R(z))/γ_w(z) 的有理形式。

    - N = P - cQ 被 (z - w) 整除，余数即认证残差
    - unimodular (R 为 Blaschke 乘积) 时 D = Q - c̄P 被 (1 - w̄z) 整除，
      通过反转多项式对 w̄ 做综合除法实现
    - 一般有理映射保留分子中的 (1 - w̄z) 因子
    """
    cfg = Config()
    P, Q = R.numerator, R.denominator
    c = R(w)
    if abs(c) >= 1.0 - cfg.DEGENERATE_TOL:
        code = DEGREE_EXHAUSTED if unimodular else DEGENERATE_VALUE
        raise EngineError(code, f"R(w) 已到达单位圆周: |R({w})| = {abs(c)}")

    N = P - Q * c
    D = Q - P * c.conjugate()

    N1, rem = N.synthetic_division(w)
    # N = P - cQ 本身是相消结果，残差以相消前的系数尺度为基准
    scale = _cancellation_scale(P, Q, c, w)
    residual = abs(rem) / scale
    if residual > cfg.DEFLATION_TOL:
        raise EngineError(
            DEFLATION_RESIDUAL,
            f"消去根 w = {w} 后余数过大",
            detail=f"residual {residual:.3e}",
        )

    if w == 0:
        return RationalMap(N1, D).normalized()

    n = max(P.degree, Q.degree, 1)
    wc = w.conjugate()
    D_rev = D.reversed(n)
    quotient, d_rem = D_rev.synthetic_division(wc)
    d_residual = abs(d_rem) / _cancellation_scale(Q, P, c, w)
    if d_residual <= cfg.DEFLATION_TOL:
        return RationalMap(N1, quotient.reversed(n - 1)).normalized()
    if unimodular:
        raise EngineError(
            DEFLATION_RESIDUAL,
            f"分母不含因子 (1 - w̄z)，w = {w}",
            detail=f"residual {d_residual:.3e}",
        )
    logger.debug(f"一般有理映射在 w = {w} 处保留 (1 - w̄z) 因子")
    return RationalMap(N1 * Polynomial((1.0, -wc)), D).normalized()


def _cancellation_scale(A: Polynomial, B: Polynomial, c: complex, w: complex) -> float:
    """A - cB 相消前的系数尺度 Σ(|A_k| + |c||B_k|)·max(1, |w|)^k。"""
    r = max(1.0, abs(w))
    size = max(len(A.coefficients), len(B.coefficients))
    a = list(A.coefficients) + [0j] * (size - len(A.coefficients))
    b = list(B.coefficients) + [0j] * (size - len(B.coefficients))
    pairs = enumerate(zip(a, b, strict=True))
    total = sum((abs(x) + abs(c) * abs(y)) * r**k for k, (x, y) in pairs)
    return total or 1.0
