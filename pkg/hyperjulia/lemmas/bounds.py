"""角导数下界阶梯：完整形式、(1-|v|)/(1+|v|) 简化形式与截断级数。

由 β 递推展开得
β = Σ_i (∏_{h<=i} F_h)·W_i + (∏_{h<=n} F_h)·β_n，
F_h = |u_{h-1} - v_h|²/(1-|v_h|²)，W_i = (1-|w_i|²)/|σ-w_i|²，
因此每个部分和都是 β 的下界。
"""

from __future__ import annotations

import logging
from collections.abc import Sequence

from hyperjulia.boundary.chain import BetaChain
from hyperjulia.boundary.dilation import BoundaryDilation
from hyperjulia.config import Config
from hyperjulia.errors import PRECONDITION_FAILED, EngineError
from hyperjulia.geometry.disk import (
    BoundaryPoint,
    DiskPoint,
    PointLike,
    as_complex,
    gamma,
    horocycle_functional,
)
from hyperjulia.hdq.chain import DeltaChain, next_stage
from hyperjulia.hdq.quotient import boundary_quotient, hyperbolic_derivative
from hyperjulia.hdq.selfmap import SelfMap
from hyperjulia.lemmas.julia import finite_dilation
from hyperjulia.lemmas.report import build_report, radial_widen
from hyperjulia.result.models import EstimateLadder, VerificationReport

logger = logging.getLogger("hyperjulia")

_ALIGN_TOL = 1e-9


def _factor(u: complex, v: complex, simplified: bool) -> float:
    if simplified:
        return (1.0 - abs(v)) / (1.0 + abs(v))
    return abs(u - v) ** 2 / (1.0 - abs(v) ** 2)


def _weight(sigma: complex, w: complex, simplified: bool) -> float:
    if simplified:
        return (1.0 - abs(w)) / (1.0 + abs(w))
    return 1.0 / horocycle_functional(sigma, w)


def _aligned(u: complex, v: complex, sigma: complex, w: complex) -> bool:
    """简化形式取等：|u - v| = 1 - |v| 且 |σ - w| = 1 + |w|。"""
    return (
        abs(abs(u - v) - (1.0 - abs(v))) <= _ALIGN_TOL
        and abs(abs(sigma - w) - (1.0 + abs(w))) <= _ALIGN_TOL
    )


def _ladder(
    sigma: complex,
    boundary_values: Sequence[complex],
    stage_values: Sequence[complex],
    points: Sequence[complex],
    beta: float,
    simplified: bool,
) -> EstimateLadder:
    terms: list[float] = []
    product, total = 1.0, 0.0
    aligned = True
    for u, v, w in zip(boundary_values, stage_values, points, strict=False):
        product *= _factor(u, v, simplified)
        total += product * _weight(sigma, w, simplified)
        terms.append(total)
        aligned = aligned and _aligned(u, v, sigma, w)
    return EstimateLadder(
        k=len(terms) - 1,
        terms=terms,
        final=terms[-1],
        beta=beta,
        simplified=simplified,
        aligned=aligned if simplified else None,
        residual=beta - terms[-1],
    )


def lower_bound_ladder(chain: DeltaChain, bchain: BetaChain) -> EstimateLadder:
    """链 w_1..w_{k+1} 上的完整下界；final = terms[k] <= β，f ∈ ℬ_{k+1} 时取等。"""
    if chain.k < 1:
        raise EngineError(PRECONDITION_FAILED, "下界阶梯至少需要一个基点")
    return _ladder(
        bchain.sigma.value,
        bchain.boundary_values,
        chain.stage_values,
        chain.points,
        bchain.beta,
        simplified=False,
    )


def lower_bound_simplified(chain: DeltaChain, bchain: BetaChain) -> EstimateLadder:
    """以 |τ - v| >= 1 - |v| 放缩后的阶梯，逐项不超过完整形式。"""
    if chain.k < 1:
        raise EngineError(PRECONDITION_FAILED, "下界阶梯至少需要一个基点")
    return _ladder(
        bchain.sigma.value,
        bchain.boundary_values,
        chain.stage_values,
        chain.points,
        bchain.beta,
        simplified=True,
    )


def lower_bound_series(
    f: SelfMap,
    sigma: PointLike,
    points: Sequence[PointLike] | None = None,
    *,
    simplified: bool = False,
    dilation: BoundaryDilation | None = None,
) -> EstimateLadder:
    """
    逐点延长链 (默认全取 0) 直到新增项 < SERIES_TOL 或达到 SERIES_CAP 项；
    下一阶段将耗尽 Blaschke 次数时提前停止。residual 仅作实验量输出。
    """
    cfg = Config()
    s = BoundaryPoint(as_complex(sigma)).value
    dil = finite_dilation(f, s, dilation)
    assert dil.tau is not None
    cap = cfg.SERIES_CAP if points is None else min(cfg.SERIES_CAP, len(points))

    g, u = f, dil.tau.value
    product = 1.0
    us: list[complex] = []
    vs: list[complex] = []
    ws: list[complex] = []
    for i in range(cap):
        w = DiskPoint(as_complex(points[i]) if points is not None else 0j).value
        v = g(w)
        us.append(u)
        vs.append(v)
        ws.append(w)
        product *= _factor(u, v, simplified)
        term = product * _weight(s, w, simplified)
        if term < cfg.SERIES_TOL or g.blaschke_degree == 1:
            break
        u = boundary_quotient(u, v, s, w)
        g = next_stage(g, w, i + 1)
    ladder = _ladder(s, us, vs, ws, dil.beta, simplified)
    logger.debug(f"截断级数下界: {len(ladder.terms)} 项, 残差 {ladder.residual:.3e}")
    return ladder


def check_lower_bound(
    chain: DeltaChain,
    bchain: BetaChain,
    *,
    simplified: bool = False,
) -> VerificationReport:
    """lhs = final，rhs = β；完整形式在 f ∈ ℬ_{k+1} 时取等，简化形式另需对齐。"""
    build = lower_bound_simplified if simplified else lower_bound_ladder
    ladder = build(chain, bchain)
    expected = chain.base.blaschke_degree_is(ladder.k + 1)
    if simplified and expected is not None:
        expected = expected and bool(ladder.aligned)
    tol = Config().TOL_CHECK
    monotone = all(b >= a - tol for a, b in zip(ladder.terms, ladder.terms[1:], strict=False))
    return build_report(
        "lower_bound_simplified" if simplified else "lower_bound",
        ladder.final,
        ladder.beta,
        equality_expected=expected,
        inputs={
            "map": chain.base.describe(),
            "sigma": bchain.sigma.value,
            "points": list(chain.points),
            "terms": ladder.terms,
        },
        widen=radial_widen(bchain.confidence, bchain.beta, ladder.beta),
        diagnostic=None if monotone else "ladder terms not monotone",
    )


def check_basso(
    f: SelfMap,
    sigma: PointLike,
    w: PointLike,
    *,
    dilation: BoundaryDilation | None = None,
) -> VerificationReport:
    """
    w ≠ 0：(|w| - |γ_{f(0)}(f(w))|)/(|w| + |γ_{f(0)}(f(w))|) + (1-|w|²)/|σ-w|²
           <= β(1-|f(w)|²)/|f(σ)-f(w)|²；
    w = 0：2/(1+|f^h(0)|)·(1-|f(0)|)/(1+|f(0)|) <= β。
    """
    s = BoundaryPoint(as_complex(sigma)).value
    wv = DiskPoint(as_complex(w)).value
    dil = finite_dilation(f, s, dilation)
    assert dil.tau is not None
    f0 = f(0j)
    if wv == 0:
        fh = abs(hyperbolic_derivative(f, 0j))
        lhs = 2.0 / (1.0 + fh) * (1.0 - abs(f0)) / (1.0 + abs(f0))
        rhs = dil.beta
    else:
        fw = f(wv)
        moved = abs(gamma(f0, fw))
        lhs = (abs(wv) - moved) / (abs(wv) + moved) + 1.0 / horocycle_functional(s, wv)
        rhs = dil.beta * (1.0 - abs(fw) ** 2) / abs(dil.tau.value - fw) ** 2
    return build_report(
        "basso",
        lhs,
        rhs,
        equality_expected=None,
        inputs={"map": f.describe(), "sigma": s, "w": wv, "beta": dil.beta},
        widen=radial_widen(dil.confidence, dil.beta, rhs),
    )
