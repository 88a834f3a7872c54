"""边界伸缩系数 β_f(σ)：Blaschke 乘积取精确值，黑盒映射做径向外推。"""

from __future__ import annotations

import logging
import math
from collections.abc import Sequence
from dataclasses import dataclass
from enum import StrEnum

from hyperjulia.config import Config
from hyperjulia.errors import INCONCLUSIVE_LIMIT, INCONSISTENT_INPUT, INVALID_POINT, EngineError
from hyperjulia.geometry.disk import BoundaryPoint, PointLike, as_complex
from hyperjulia.hdq.selfmap import SelfMap
from hyperjulia.rational.blaschke import BlaschkeProduct

logger = logging.getLogger("hyperjulia")

_UNIMODULAR_TOL = 1e-10


class DilationMethod(StrEnum):
    EXACT = "exact"
    RADIAL = "radial"


@dataclass(frozen=True)
class BoundaryDilation:
    """β = math.inf 表示 σ 处无有限角导数；tau 为 σ 处的非切向极限 (可能未知)。"""

    sigma: BoundaryPoint
    tau: BoundaryPoint | None
    beta: float
    method: DilationMethod
    confidence: float = 0.0

    def __post_init__(self) -> None:
        if not self.beta > 0:
            raise EngineError(INCONSISTENT_INPUT, f"边界伸缩系数必须为正: β = {self.beta}")

    @property
    def is_finite(self) -> bool:
        return math.isfinite(self.beta)

    @property
    def is_exact(self) -> bool:
        return self.method is DilationMethod.EXACT


def beta_exact(f: BlaschkeProduct | SelfMap, sigma: PointLike) -> BoundaryDilation:
    """
    精确有理映射：σ 处取值单模时 β = |f'(σ)|，否则 β = +∞。
    Blaschke 乘积在整个单位圆周上总是单模。
    """
    s = BoundaryPoint(as_complex(sigma))
    if isinstance(f, SelfMap) and not f.is_exact:
        raise EngineError(INVALID_POINT, f"{f.name} 不是精确有理映射，应使用径向外推")
    value = f(s.value)
    if abs(abs(value) - 1.0) > _UNIMODULAR_TOL:
        logger.debug(f"σ = {s.value} 处 |f(σ)| = {abs(value):.12f}，β 记为 +∞")
        return BoundaryDilation(s, None, math.inf, DilationMethod.EXACT)
    beta = abs(f.derivative(s.value))
    return BoundaryDilation(s, BoundaryPoint(value / abs(value)), beta, DilationMethod.EXACT)


def richardson_radial(
    sequence: Sequence[float], max_order: int | None = None
) -> tuple[float, float]:
    """
    按 1-r 折半做 Richardson 外推表：T[i][0] = q_i，
    T[i][j] = T[i][j-1] + (T[i][j-1] - T[i-1][j-1])/(2^j - 1)，第 j 列消去 (1-r)^j 项。
    取误差估计最小的表项，误差估计为同列相邻差与本行上一列修正量的较大者；
    返回 (估计值, 误差估计)。
    """
    if len(sequence) < 3:
        raise EngineError(INCONCLUSIVE_LIMIT, f"外推至少需要 3 个样本，实际 {len(sequence)}")
    order = Config().RADIAL_ORDER if max_order is None else max_order
    order = max(1, min(order, len(sequence) - 2))
    table: list[list[float]] = []
    best: tuple[float, float] | None = None
    for i, q in enumerate(sequence):
        row = [float(q)]
        for j in range(1, min(i, order) + 1):
            prev = table[i - 1][j - 1]
            row.append(row[j - 1] + (row[j - 1] - prev) / (2.0**j - 1.0))
        table.append(row)
        for j in range(1, len(row)):
            if j >= len(table[i - 1]):
                continue
            error = max(abs(row[j] - table[i - 1][j]), abs(row[j] - row[j - 1]))
            if math.isfinite(error) and (best is None or error < best[1]):
                best = (row[j], error)
    if best is None:
        raise EngineError(INCONCLUSIVE_LIMIT, "外推表中没有有限的估计值")
    return best


def beta_radial(f: SelfMap, sigma: PointLike) -> BoundaryDilation:
    """
    在 r_m = 1 - 2^{-m} (m = M_MIN..M_MAX) 上采样 (1-|f(r_m σ)|)/(1-r_m)。
    全程检测发散，外推只用 m <= RADIAL_FIT_M_MAX 的样本。
    """
    cfg = Config()
    s = BoundaryPoint(as_complex(sigma))
    quotients: list[float] = []
    last_value = 0j
    for m in range(cfg.RADIAL_M_MIN, cfg.RADIAL_M_MAX + 1):
        gap = 2.0**-m
        last_value = f((1.0 - gap) * s.value)
        q = (1.0 - abs(last_value)) / gap
        quotients.append(q)
        if q >= cfg.BETA_INF_CAP and _growing(quotients, cfg.RADIAL_GROWTH_FACTOR):
            logger.info(f"{f.name} 在 σ = {s.value} 处径向商发散，β 记为 +∞")
            return BoundaryDilation(s, None, math.inf, DilationMethod.RADIAL)

    # 1-|f| 的相消误差约为 eps·2^m，只在舍入噪声之前的样本上外推
    fit = quotients[: max(0, cfg.RADIAL_FIT_M_MAX - cfg.RADIAL_M_MIN + 1)]
    estimate, increment = richardson_radial(fit)
    if not estimate > 0 or increment > cfg.RADIAL_TOL * max(1.0, abs(estimate)):
        raise EngineError(
            INCONCLUSIVE_LIMIT,
            f"{f.name} 在 σ = {s.value} 处径向极限不收敛",
            detail=f"estimate {estimate:.6g}, increment {increment:.3e}",
        )
    tau = BoundaryPoint(last_value / abs(last_value)) if abs(last_value) > 0 else None
    logger.debug(f"径向外推: β ≈ {estimate:.12g}, 增量 {increment:.3e}")
    return BoundaryDilation(s, tau, estimate, DilationMethod.RADIAL, increment)


def _growing(quotients: list[float], factor: float) -> bool:
    if len(quotients) < 4:
        return False
    tail = quotients[-4:]
    return all(b > factor * a for a, b in zip(tail, tail[1:], strict=False))


def dilation_for(f: SelfMap, sigma: PointLike) -> BoundaryDilation:
    """精确有理映射取精确值，黑盒映射径向外推。"""
    if f.is_exact:
        return beta_exact(f, sigma)
    return beta_radial(f, sigma)


def beta_star(
    f: SelfMap,
    sigma: PointLike,
    f_sigma: PointLike,
    beta: float,
    w: PointLike,
) -> float:
    """β*_f(σ; w) = β(1-|f(w)|²)/|f(σ)-f(w)|² - (1-|w|²)/|σ-w|²，非负。"""
    s, u, wv = as_complex(sigma), as_complex(f_sigma), as_complex(w)
    fw = f(wv)
    scaled = beta * (1.0 - abs(fw) ** 2) / abs(u - fw) ** 2
    value = scaled - (1.0 - abs(wv) ** 2) / abs(s - wv) ** 2
    if value < -Config().TOL_CHECK * max(1.0, scaled):
        raise EngineError(
            INCONSISTENT_INPUT,
            f"β* 为负: {value:.3e}，β 或 f(σ) 与映射不一致",
        )
    return max(value, 0.0)
