"""沿差商链递推边界伸缩系数与边界值。"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass

from hyperjulia.boundary.dilation import BoundaryDilation, dilation_for
from hyperjulia.config import Config
from hyperjulia.errors import INCONSISTENT_INPUT, PRECONDITION_FAILED, EngineError
from hyperjulia.geometry.disk import BoundaryPoint, PointLike, as_complex
from hyperjulia.hdq.chain import DeltaChain
from hyperjulia.hdq.quotient import boundary_quotient

logger = logging.getLogger("hyperjulia")


@dataclass(frozen=True, eq=False)
class BetaChain:
    """betas[h] = β_{Δ_{w_h..w_1}f}(σ)，boundary_values[h] = Δ_{w_h..w_1}f(σ)，h = 0..k。"""

    chain: DeltaChain
    sigma: BoundaryPoint
    betas: tuple[float, ...]
    boundary_values: tuple[complex, ...]
    dilation: BoundaryDilation

    @property
    def beta(self) -> float:
        return self.betas[0]

    @property
    def confidence(self) -> float:
        return self.dilation.confidence


def beta_chain(
    chain: DeltaChain,
    sigma: PointLike,
    dilation: BoundaryDilation | None = None,
) -> BetaChain:
    """
    β 与边界值的递推：
    betas[h] = betas[h-1]·(1-|v|²)/|u-v|² - (1-|w_h|²)/|σ-w_h|²，
    boundary_values[h] = γ_v(u)/γ_w(σ)，u = boundary_values[h-1]，v = stage_values[h-1]。
    """
    s = BoundaryPoint(as_complex(sigma))
    dil = dilation if dilation is not None else dilation_for(chain.base, s)
    if not math.isfinite(dil.beta) or dil.tau is None:
        raise EngineError(
            PRECONDITION_FAILED,
            f"{chain.base.name} 在 σ = {s.value} 处 β 无穷，不能沿链递推",
        )
    tol = Config().TOL_CHECK
    betas = [dil.beta]
    values = [dil.tau.value]
    for h, (w, v) in enumerate(zip(chain.points, chain.stage_values, strict=True), start=1):
        u = values[-1]
        scaled = betas[-1] * (1.0 - abs(v) ** 2) / abs(u - v) ** 2
        beta = scaled - (1.0 - abs(w) ** 2) / abs(s.value - w) ** 2
        if beta < -tol * max(1.0, scaled):
            raise EngineError(
                INCONSISTENT_INPUT,
                f"阶段 {h} 的 β 为负: {beta:.3e}",
            )
        betas.append(max(beta, 0.0))
        values.append(BoundaryPoint(boundary_quotient(u, v, s.value, w)).value)
    logger.debug(f"β 递推完成: {[round(b, 12) for b in betas]}")
    return BetaChain(chain, s, tuple(betas), tuple(values), dil)
