"""参数扫描 — 沿一个变量 (z | w | r | k) 逐点求值，每个网格点一行。

- z、w：沿 σ 方向的径向点 value·σ，另一变量取 seed 决定的固定样本
- r：径向商 (1-|f(rσ)|)/(1-r)，rhs 为 β
- k：下界阶梯第 k 项，rhs 为 β
网格点按线程池并发求值，输出顺序始终是网格下标顺序。
"""

from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import partial

import numpy as np

from hyperjulia.boundary.chain import BetaChain, beta_chain
from hyperjulia.boundary.dilation import BoundaryDilation
from hyperjulia.config import Config
from hyperjulia.core.models import SuiteConfig, SweepGrid
from hyperjulia.core.runner import (
    SAMPLE_RADIUS,
    SuiteContext,
    _chain_length,
    _chain_points,
    resolve_sigmas,
    suite_rng,
    tolerance_overrides,
)
from hyperjulia.errors import PRECONDITION_FAILED, SPEC_VALIDATION_ERROR, EngineError
from hyperjulia.hdq.chain import DeltaChain, delta_chain
from hyperjulia.hdq.selfmap import SelfMap
from hyperjulia.lemmas.bounds import lower_bound_series
from hyperjulia.lemmas.cowen_pommerenke import check_corollary_CP
from hyperjulia.lemmas.julia import (
    check_julia,
    check_multipoint_julia,
    check_schwarz_pick,
    check_two_point_julia,
    finite_dilation,
)
from hyperjulia.lemmas.mercer import check_mercer
from hyperjulia.result.models import SweepRow, VerificationReport

logger = logging.getLogger("hyperjulia")

# 各变量支持的套件
SWEEP_SUITES: dict[str, frozenset[str]] = {
    "z": frozenset({"julia", "two-point", "multipoint", "mercer", "schwarz-pick", "origin"}),
    "w": frozenset({"two-point", "mercer", "schwarz-pick"}),
    "r": frozenset({"julia", "two-point", "multipoint", "mercer", "lower-bounds", "schwarz-pick"}),
    "k": frozenset({"lower-bounds"}),
}

# 固定变量的样本半径
FIXED_SAMPLE_RADIUS = 0.5


@dataclass(frozen=True, eq=False)
class SweepSetup:
    f: SelfMap
    sigma: complex
    dilation: BoundaryDilation
    z: complex
    w: complex
    chain: DeltaChain | None = None
    bchain: BetaChain | None = None


def grid_values(grid: SweepGrid) -> list[float]:
    """linear 等距；log1m 在 1 - x 上几何等距，适合逼近边界。"""
    if grid.variable == "k":
        return [float(k) for k in range(int(grid.start), int(grid.stop) + 1)]
    if grid.spacing == "log1m":
        return [float(1.0 - v) for v in np.geomspace(1.0 - grid.start, 1.0 - grid.stop, grid.steps)]
    return [float(v) for v in np.linspace(grid.start, grid.stop, grid.steps)]


def _check_supported(suite: str, variable: str) -> None:
    if suite not in SWEEP_SUITES[variable]:
        raise EngineError(
            SPEC_VALIDATION_ERROR,
            f"变量 {variable} 不支持套件 {suite}",
            detail=f"可选: {', '.join(sorted(SWEEP_SUITES[variable]))}",
        )


def _setup(f: SelfMap, config: SuiteConfig) -> SweepSetup:
    ctx = SuiteContext(f, config, config.suite, suite_rng(config.seed, config.suite))
    sigmas = resolve_sigmas(ctx)
    if not sigmas:
        raise EngineError(PRECONDITION_FAILED, f"{f.name} 没有可用的边界点 σ")
    s = sigmas[0]
    dil = finite_dilation(f, s)
    z, w = (v * FIXED_SAMPLE_RADIUS / SAMPLE_RADIUS for v in ctx.disk_samples(2))
    chain = bchain = None
    if config.suite in ("multipoint", "schwarz-pick"):
        chain = delta_chain(f, _chain_points(ctx, _chain_length(ctx)))
        if config.suite == "multipoint":
            bchain = beta_chain(chain, s, dil)
    return SweepSetup(f, s, dil, z, w, chain, bchain)


def _point_report(setup: SweepSetup, suite: str, z: complex, w: complex) -> VerificationReport:
    f, s, dil = setup.f, setup.sigma, setup.dilation
    match suite:
        case "julia":
            assert dil.tau is not None
            return check_julia(f, s, dil.tau.value, dil.beta, z, confidence=dil.confidence)
        case "two-point":
            return check_two_point_julia(f, s, z, w, dilation=dil)
        case "multipoint":
            assert setup.chain is not None and setup.bchain is not None
            return check_multipoint_julia(setup.chain, setup.bchain, z)
        case "mercer":
            return check_mercer(f, s, w, z, dilation=dil)
        case "schwarz-pick":
            assert setup.chain is not None
            return check_schwarz_pick(setup.chain, z, w)
        case "origin":
            return check_corollary_CP(f, s, z, dilation=dil)[0]
    raise EngineError(SPEC_VALIDATION_ERROR, f"套件 {suite} 不支持点扫描")


def _radial_row(setup: SweepSetup, index: int, r: float) -> SweepRow:
    """holds 按 Julia 引理给出的严格界 q·(1+r)/(1+|f(rσ)|) <= β 判定。"""
    fz = setup.f(r * setup.sigma)
    q = (1.0 - abs(fz)) / (1.0 - r)
    beta = setup.dilation.beta
    bound = q * (1.0 + r) / (1.0 + abs(fz))
    tol = Config().TOL_CHECK + setup.dilation.confidence
    return SweepRow(
        index=index,
        variable="r",
        value=r,
        lhs=q,
        rhs=beta,
        gap=beta - q,
        holds=bound <= beta + tol * max(1.0, beta),
    )


def _row(setup: SweepSetup, suite: str, variable: str, item: tuple[int, float]) -> SweepRow:
    index, value = item
    if variable == "r":
        return _radial_row(setup, index, value)
    point = value * setup.sigma
    z, w = (point, setup.w) if variable == "z" else (setup.z, point)
    report = _point_report(setup, suite, z, w)
    return SweepRow(
        index=index,
        variable=variable,
        value=value,
        lhs=report.lhs,
        rhs=report.rhs,
        gap=report.gap,
        holds=report.holds,
    )


def _ladder_rows(f: SelfMap, config: SuiteConfig, grid: SweepGrid) -> list[SweepRow]:
    ctx = SuiteContext(f, config, config.suite, suite_rng(config.seed, config.suite))
    s = resolve_sigmas(ctx)[0]
    ks = [int(v) for v in grid_values(grid)]
    count = max(ks) + 1
    points = _chain_points(ctx, count) if config.points is not None else [0j] * count
    ladder = lower_bound_series(f, s, points, simplified=grid.simplified)
    tol = Config().TOL_CHECK
    rows = []
    for index, k in enumerate(ks):
        if k >= len(ladder.terms):
            logger.warning(f"阶梯在 k = {len(ladder.terms) - 1} 处终止，k = {k} 无数据")
            break
        term = ladder.terms[k]
        rows.append(
            SweepRow(
                index=index,
                variable="k",
                value=float(k),
                lhs=term,
                rhs=ladder.beta,
                gap=ladder.beta - term,
                holds=term <= ladder.beta + tol * max(1.0, ladder.beta),
            )
        )
    return rows


def run_sweep(f: SelfMap, config: SuiteConfig, grid: SweepGrid) -> list[SweepRow]:
    """
    逐网格点求值，返回按下标排序的行。
    - 变量与套件组合不受支持 → SPEC_VALIDATION_ERROR
    - 前提不满足 (如自同构输入) 时照常抛出 EngineError
    """
    _check_supported(config.suite, grid.variable)
    cfg = Config()
    with cfg.override(**tolerance_overrides(config)):
        if grid.variable == "k":
            return _ladder_rows(f, config, grid)
        setup = _setup(f, config)
        values = grid_values(grid)
        logger.info(f"扫描 {grid.variable}: {len(values)} 个网格点, 套件 {config.suite}")
        row = partial(_row, setup, config.suite, grid.variable)
        with ThreadPoolExecutor(max_workers=cfg.THREADS) as pool:
            return list(pool.map(row, enumerate(values)))
