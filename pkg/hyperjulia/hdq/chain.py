"""迭代双曲差商链 Δ_{w_k,...,w_1}f，缓存全部中间阶段。"""

from __future__ import annotations

import logging
from collections.abc import Sequence
from dataclasses import dataclass

from hyperjulia.config import Config
from hyperjulia.errors import (
    CERTIFICATION_FAILED,
    DEGENERATE_VALUE,
    DEGREE_EXHAUSTED,
    EngineError,
)
from hyperjulia.geometry.disk import DiskPoint, PointLike, as_complex, gamma
from hyperjulia.hdq.deflation import deflate
from hyperjulia.hdq.differentiation import contour_taylor
from hyperjulia.hdq.quotient import hyperbolic_derivative
from hyperjulia.hdq.selfmap import SelfMap

logger = logging.getLogger("hyperjulia")


@dataclass(frozen=True, eq=False)
class DeltaChain:
    """
    stages[h] = Δ_{w_h,...,w_1}f (stages[0] = f)；
    stage_values[h-1] = Δ_{w_{h-1},...,w_1}f(w_h)，h = 1..k。
    terminal 链 (k = d 的 Blaschke 基映射) 不构造最后一个阶段。
    """

    base: SelfMap
    points: tuple[complex, ...]
    stages: tuple[SelfMap, ...]
    stage_values: tuple[complex, ...]

    @property
    def k(self) -> int:
        return len(self.points)

    @property
    def terminal(self) -> bool:
        return len(self.stages) == self.k

    @property
    def final(self) -> SelfMap:
        if self.terminal:
            raise EngineError(
                DEGREE_EXHAUSTED,
                f"链长 {self.k} 已耗尽 Blaschke 次数，最终阶段为单模常数",
            )
        return self.stages[-1]

    def evaluate(self, z: PointLike) -> complex:
        """最终阶段在 z 处的值。"""
        return self.final(as_complex(z))

    def stage_degree(self, h: int) -> int | None:
        return self.stages[h].blaschke_degree

    def extended(self, w: PointLike) -> DeltaChain:
        """在末尾追加一个基点，复用已有阶段。"""
        wv = DiskPoint(as_complex(w)).value
        last = self.final
        value = last(wv)
        stage = next_stage(last, wv, self.k + 1)
        return DeltaChain(
            self.base,
            self.points + (wv,),
            self.stages + (stage,),
            self.stage_values + (value,),
        )


def delta_chain(
    f: SelfMap,
    points: Sequence[PointLike],
    *,
    allow_terminal: bool = False,
) -> DeltaChain:
    """
    构造 Δ_{w_k,...,w_1}f 全部阶段。
    - d 次 Blaschke 基映射要求 k < d；allow_terminal 时允许 k = d，但不构造第 k 个阶段
    - 精确有理阶段逐次消根，Blaschke 阶段次数认证为 d - h
    - 黑盒阶段为闭包，构造时抽检
    """
    ws = tuple(DiskPoint(as_complex(p)).value for p in points)
    k = len(ws)
    d = f.blaschke_degree
    if d is not None and (k > d or (k == d and not allow_terminal)):
        raise EngineError(
            DEGREE_EXHAUSTED,
            f"{d} 次 Blaschke 乘积最多支持 {d - 1} 个基点，实际 {k} 个",
        )

    stages: list[SelfMap] = [f]
    values: list[complex] = []
    for h, w in enumerate(ws, start=1):
        g = stages[-1]
        values.append(g(w))
        if d is not None and h == d:
            break
        stages.append(next_stage(g, w, h))
    logger.debug(f"差商链构造完成: {f.name}, k = {k}, 阶段数 {len(stages)}")
    return DeltaChain(f, ws, tuple(stages), tuple(values))


def next_stage(g: SelfMap, w: complex, h: int) -> SelfMap:
    name = f"Δ{h}[{g.name}]"
    degree = g.blaschke_degree - 1 if g.blaschke_degree is not None else None
    if degree is not None and degree < 0:
        raise EngineError(DEGREE_EXHAUSTED, f"{g.name} 已为单模常数，不能继续取差商")

    if g.rational is not None:
        R = deflate(g.rational, w, unimodular=g.blaschke_degree is not None)
        if degree is not None and R.numerator.degree != degree:
            raise EngineError(
                CERTIFICATION_FAILED,
                f"阶段 {h} 次数认证失败: 期望 {degree}，分子次数 {R.numerator.degree}",
            )
        return SelfMap.from_rational(R, name, blaschke_degree=degree, check=False)

    c = g(w)
    if abs(c) >= 1.0 - Config().DEGENERATE_TOL:
        raise EngineError(DEGENERATE_VALUE, f"{g.name} 在 w = {w} 处取值到达边界")

    def stage(z: complex) -> complex:
        if abs(gamma(w, z)) < Config().COINCIDENCE_THRESHOLD:
            return hyperbolic_derivative(g, z)
        return gamma(c, g(z)) / gamma(w, z)

    def stage_derivative(z: complex) -> complex:
        return contour_taylor(stage, z, 1)[1]

    return SelfMap.black_box(
        stage,
        derivative=stage_derivative,
        name=name,
        blaschke_degree=degree,
        samples=Config().STAGE_SPOT_CHECK_SAMPLES,
    )
