"""套件执行器 - 按名称运行校验套件、汇总报告

本模块负责 verify 的核心流程：
- 套件分派 (run_suite)：每个套件由若干"族"组成，族的前提不满足时记为跳过
- 单映射执行 (run_map)：suite = all 时按固定顺序运行全部套件
- 批量执行 (verify)：多个映射按线程池并发，结果按输入顺序汇总

随机输入 (z, w 样本与未指定的链基点) 一律由 seed 与套件名派生的生成器给出，
同一 seed 下单独运行某套件与在 all 中运行得到相同的输入。
"""

from __future__ import annotations

import logging
import math
from collections.abc import Callable, Sequence
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from functools import partial
from typing import Any

import numpy as np

from hyperjulia import __version__
from hyperjulia.boundary.chain import beta_chain
from hyperjulia.boundary.dilation import beta_exact, beta_radial, dilation_for
from hyperjulia.boundary.fixed_points import boundary_fixed_points, multiple_fixed_point_sigmas
from hyperjulia.config import Config
from hyperjulia.core.models import SUITES, Pair, SuiteConfig
from hyperjulia.errors import (
    DEGREE_EXHAUSTED,
    PRECONDITION_FAILED,
    SPEC_VALIDATION_ERROR,
    EngineError,
)
from hyperjulia.geometry.disk import BoundaryPoint, sample_disk
from hyperjulia.hdq.chain import delta_chain
from hyperjulia.hdq.selfmap import SelfMap
from hyperjulia.hdq.taylor import vanishing_order
from hyperjulia.lemmas.bounds import check_basso, check_lower_bound, lower_bound_series
from hyperjulia.lemmas.cowen_pommerenke import (
    check_corollary_CP,
    check_proposition_2CP,
    check_proposition_CPn,
    cowen_pommerenke,
    cowen_pommerenke_multiple,
)
from hyperjulia.lemmas.julia import (
    check_2p_jwc,
    check_horocycle_image,
    check_julia,
    check_jwc,
    check_multipoint_julia,
    check_schwarz_pick,
    check_two_point_julia,
    finite_dilation,
)
from hyperjulia.lemmas.mercer import check_mercer
from hyperjulia.lemmas.report import build_report, radial_widen
from hyperjulia.result.models import (
    BetaReport,
    ErrorInfo,
    ReportDocument,
    ReportHeader,
    VerificationReport,
)

logger = logging.getLogger("hyperjulia")

# 前提不满足时可跳过的错误码
SKIPPABLE_CODES = frozenset({PRECONDITION_FAILED, DEGREE_EXHAUSTED})

# 随机样本所在圆盘半径
SAMPLE_RADIUS = 0.9

# 未给出 k 时非 Blaschke 映射的默认链长
DEFAULT_CHAIN_LENGTH = 2

# 以边界不动点作为 σ 的套件
CP_SUITES = frozenset({"cowen-pommerenke", "cp-multiple", "origin"})


@dataclass
class SuiteOutcome:
    """一次套件运行的结果：报告与被跳过的族 (附原因)"""

    reports: list[VerificationReport] = field(default_factory=list)
    skipped: list[str] = field(default_factory=list)
    skip_errors: list[EngineError] = field(default_factory=list)

    def extend(self, other: SuiteOutcome) -> None:
        self.reports.extend(other.reports)
        self.skipped.extend(other.skipped)
        self.skip_errors.extend(other.skip_errors)


@dataclass(frozen=True)
class SuiteContext:
    f: SelfMap
    config: SuiteConfig
    suite: str
    rng: np.random.Generator

    def disk_samples(self, n: int | None = None) -> list[complex]:
        count = self.config.samples if n is None else n
        return [complex(v) for v in sample_disk(self.rng, count, SAMPLE_RADIUS)]

    @property
    def z0(self) -> complex:
        return complex(*self.config.z0)


def _pairs(values: Sequence[Pair]) -> list[complex]:
    return [complex(re, im) for re, im in values]


def suite_rng(seed: int, suite: str) -> np.random.Generator:
    """seed 与套件名共同决定的生成器。"""
    return np.random.default_rng([seed, SUITES.index(suite)])


def _attempt(out: SuiteOutcome, label: str, family: Callable[[], list[VerificationReport]]) -> None:
    """运行一个族；前提不满足 (PRECONDITION_FAILED / DEGREE_EXHAUSTED) 时记为跳过。"""
    try:
        out.reports.extend(family())
    except EngineError as e:
        if e.code not in SKIPPABLE_CODES:
            raise
        logger.warning(f"跳过 {label}: {e.message}")
        out.skipped.append(f"{label}: {e.message}")
        out.skip_errors.append(e)


def resolve_sigmas(ctx: SuiteContext) -> list[complex]:
    """
    σ 列表：显式给出时原样使用；auto 时
    - 非 CP 套件取 σ = 1
    - cp-multiple 取边界条件方程的解，其余 CP 套件取边界不动点
    """
    if ctx.config.sigmas != "auto":
        return _pairs(ctx.config.sigmas)
    if ctx.suite not in CP_SUITES:
        return [1 + 0j]
    if ctx.suite == "cp-multiple":
        k = _vanishing_k(ctx)
        return [p.value for p in multiple_fixed_point_sigmas(ctx.f, ctx.z0, k)]
    found = [p.value for p in boundary_fixed_points(ctx.f)]
    logger.info(f"{ctx.f.name} 边界不动点: {found}")
    return found


def default_chain_length(f: SelfMap) -> int:
    """Blaschke 基映射取 d - 1 (最长非终止链)，其余取 DEFAULT_CHAIN_LENGTH。"""
    if f.blaschke_degree is not None:
        return max(f.blaschke_degree - 1, 0)
    return DEFAULT_CHAIN_LENGTH


def _chain_points(ctx: SuiteContext, count: int) -> list[complex]:
    if ctx.config.points is not None:
        return _pairs(ctx.config.points)
    return ctx.disk_samples(count)


def _chain_length(ctx: SuiteContext) -> int:
    if ctx.config.points is not None:
        return len(ctx.config.points)
    if ctx.config.k is not None:
        return ctx.config.k
    return default_chain_length(ctx.f)


def _vanishing_k(ctx: SuiteContext) -> int:
    if ctx.config.k is not None:
        return ctx.config.k
    k = vanishing_order(ctx.f, ctx.z0)
    if k < 1:
        raise EngineError(PRECONDITION_FAILED, f"z₀ = {ctx.z0} 不是 {ctx.f.name} 的不动点")
    return k


def _finite_betas(f: SelfMap, sigmas: Sequence[complex]) -> tuple[list[complex], list[float]]:
    """β = +∞ 的边界点对和式无贡献，直接剔除。"""
    kept: list[complex] = []
    betas: list[float] = []
    for s in sigmas:
        dil = dilation_for(f, s)
        if dil.is_finite:
            kept.append(s)
            betas.append(dil.beta)
        else:
            logger.info(f"σ = {s} 处 β 无穷，不计入和式")
    return kept, betas


# ---------------------------------------------------------------------------
# 各套件
# ---------------------------------------------------------------------------
def _julia_family(f: SelfMap, s: complex, zs: list[complex]) -> list[VerificationReport]:
    dil = finite_dilation(f, s)
    assert dil.tau is not None
    tau, beta, conf = dil.tau.value, dil.beta, dil.confidence
    reports = [check_julia(f, s, tau, beta, z, confidence=conf) for z in zs]
    reports.append(check_horocycle_image(f, s, tau, beta, 1.0, confidence=conf))
    reports.append(check_jwc(f, s, dilation=dil))
    return reports


def suite_julia(ctx: SuiteContext) -> SuiteOutcome:
    out = SuiteOutcome()
    zs = ctx.disk_samples()
    for s in resolve_sigmas(ctx):
        _attempt(out, f"julia σ={s}", partial(_julia_family, ctx.f, s, zs))
    return out


def _two_point_family(
    f: SelfMap, s: complex, zs: list[complex], ws: list[complex]
) -> list[VerificationReport]:
    dil = finite_dilation(f, s)
    reports = [
        check_two_point_julia(f, s, z, w, dilation=dil) for z, w in zip(zs, ws, strict=True)
    ]
    reports.extend(check_basso(f, s, w, dilation=dil) for w in [0j, *ws])
    reports.append(check_2p_jwc(f, s, ws[0], dilation=dil))
    return reports


def suite_two_point(ctx: SuiteContext) -> SuiteOutcome:
    out = SuiteOutcome()
    zs, ws = ctx.disk_samples(), ctx.disk_samples()
    for s in resolve_sigmas(ctx):
        _attempt(out, f"two-point σ={s}", partial(_two_point_family, ctx.f, s, zs, ws))
    return out


def suite_multipoint(ctx: SuiteContext) -> SuiteOutcome:
    out = SuiteOutcome()
    k = _chain_length(ctx)
    points = _chain_points(ctx, k)
    zs = ctx.disk_samples()

    def family(s: complex) -> list[VerificationReport]:
        if k < 1:
            raise EngineError(PRECONDITION_FAILED, "多点 Julia 引理要求链长 k >= 1")
        chain = delta_chain(ctx.f, points)
        bchain = beta_chain(chain, s, finite_dilation(ctx.f, s))
        return [check_multipoint_julia(chain, bchain, z) for z in zs]

    for s in resolve_sigmas(ctx):
        _attempt(out, f"multipoint σ={s}", partial(family, s))
    return out


def suite_schwarz_pick(ctx: SuiteContext) -> SuiteOutcome:
    """经典 (k = 0) 与多点形式的 Poincaré 距离压缩。"""
    out = SuiteOutcome()
    k = _chain_length(ctx)
    points = _chain_points(ctx, k)
    zs, ws = ctx.disk_samples(), ctx.disk_samples()

    def family(chain_points: list[complex]) -> list[VerificationReport]:
        chain = delta_chain(ctx.f, chain_points)
        return [check_schwarz_pick(chain, z, w) for z, w in zip(zs, ws, strict=True)]

    _attempt(out, "schwarz-pick k=0", partial(family, []))
    if points:
        _attempt(out, f"schwarz-pick k={len(points)}", partial(family, points))
    return out


def suite_mercer(ctx: SuiteContext) -> SuiteOutcome:
    out = SuiteOutcome()
    zs, ws = ctx.disk_samples(), ctx.disk_samples()

    def family(s: complex) -> list[VerificationReport]:
        dil = finite_dilation(ctx.f, s)
        return [check_mercer(ctx.f, s, w, z, dilation=dil) for z, w in zip(zs, ws, strict=True)]

    for s in resolve_sigmas(ctx):
        _attempt(out, f"mercer σ={s}", partial(family, s))
    return out


def _series_report(f: SelfMap, s: complex) -> list[VerificationReport]:
    dil = finite_dilation(f, s)
    ladder = lower_bound_series(f, s, dilation=dil)
    report = build_report(
        "lower_bound_series",
        ladder.final,
        ladder.beta,
        equality_expected=None,
        inputs={"map": f.describe(), "sigma": s, "terms": ladder.terms},
        widen=radial_widen(dil.confidence, dil.beta, ladder.beta),
        diagnostic=f"residual {ladder.residual!r}",
    )
    return [report]


def suite_lower_bounds(ctx: SuiteContext) -> SuiteOutcome:
    """链 w_1..w_{k+1} 上的完整与简化阶梯，外加全零基点的截断级数。"""
    out = SuiteOutcome()
    if ctx.config.points is not None:
        count = len(ctx.config.points)
    elif ctx.config.k is not None:
        count = ctx.config.k + 1
    elif ctx.f.blaschke_degree is not None:
        count = min(ctx.f.blaschke_degree, Config().SERIES_CAP)
    else:
        count = DEFAULT_CHAIN_LENGTH + 1
    points = _chain_points(ctx, count)

    def family(s: complex) -> list[VerificationReport]:
        chain = delta_chain(ctx.f, points, allow_terminal=True)
        bchain = beta_chain(chain, s, finite_dilation(ctx.f, s))
        return [
            check_lower_bound(chain, bchain),
            check_lower_bound(chain, bchain, simplified=True),
        ]

    for s in resolve_sigmas(ctx):
        _attempt(out, f"lower-bounds σ={s}", partial(family, s))
        _attempt(out, f"lower-bound-series σ={s}", partial(_series_report, ctx.f, s))
    return out


def suite_cowen_pommerenke(ctx: SuiteContext) -> SuiteOutcome:
    out = SuiteOutcome()

    def family() -> list[VerificationReport]:
        sigmas, betas = _finite_betas(ctx.f, resolve_sigmas(ctx))
        return [cowen_pommerenke(ctx.f, ctx.z0, sigmas, betas)]

    _attempt(out, "cowen-pommerenke", family)
    return out


def suite_cp_multiple(ctx: SuiteContext) -> SuiteOutcome:
    out = SuiteOutcome()

    def family() -> list[VerificationReport]:
        k = _vanishing_k(ctx)
        sigmas, betas = _finite_betas(ctx.f, resolve_sigmas(ctx))
        return [cowen_pommerenke_multiple(ctx.f, ctx.z0, k, sigmas, betas)]

    _attempt(out, "cp-multiple", family)
    return out


def suite_origin(ctx: SuiteContext) -> SuiteOutcome:
    """原点处的 Cowen–Pommerenke 族：一重链、双重链与 k 阶消失。"""
    out = SuiteOutcome()
    zs = ctx.disk_samples()
    sigmas = resolve_sigmas(ctx) or [1 + 0j]

    def corollary(s: complex) -> list[VerificationReport]:
        reports = check_corollary_CP(ctx.f, s, zs[0])
        for z in zs[1:]:
            extra = check_corollary_CP(ctx.f, s, z)
            reports.extend(r for r in extra if r.name == "corollary_CP_z")
        return reports

    def double(s: complex) -> list[VerificationReport]:
        return [check_proposition_2CP(ctx.f, s, z) for z in zs]

    def vanishing(s: complex) -> list[VerificationReport]:
        k = vanishing_order(ctx.f, 0j)
        if k < 1:
            raise EngineError(PRECONDITION_FAILED, f"{ctx.f.name} 不满足 f(0) = 0")
        return [check_proposition_CPn(ctx.f, k, s, z) for z in zs]

    for s in sigmas:
        _attempt(out, f"corollary_CP σ={s}", partial(corollary, s))
        _attempt(out, f"proposition_2CP σ={s}", partial(double, s))
        _attempt(out, f"proposition_CPn σ={s}", partial(vanishing, s))
    return out


SUITE_REGISTRY: dict[str, Callable[[SuiteContext], SuiteOutcome]] = {
    "julia": suite_julia,
    "two-point": suite_two_point,
    "multipoint": suite_multipoint,
    "mercer": suite_mercer,
    "lower-bounds": suite_lower_bounds,
    "cowen-pommerenke": suite_cowen_pommerenke,
    "cp-multiple": suite_cp_multiple,
    "schwarz-pick": suite_schwarz_pick,
    "origin": suite_origin,
}


# ---------------------------------------------------------------------------
# 执行入口
# ---------------------------------------------------------------------------
def run_suite(f: SelfMap, config: SuiteConfig, suite: str) -> SuiteOutcome:
    ctx = SuiteContext(f, config, suite, suite_rng(config.seed, suite))
    logger.info(f"运行套件 {suite}: {f.name}")
    outcome = SUITE_REGISTRY[suite](ctx)
    logger.info(f"套件 {suite} 完成: {len(outcome.reports)} 条报告, 跳过 {len(outcome.skipped)}")
    return outcome


def run_map(f: SelfMap, config: SuiteConfig) -> SuiteOutcome:
    """
    单个映射上运行 config.suite。
    - all：按 SUITES 顺序运行，前提不满足的族记为跳过
    - 单个套件：全部族都被跳过时抛出第一个前提错误
    """
    if config.suite == "all":
        total = SuiteOutcome()
        for name in SUITE_REGISTRY:
            total.extend(run_suite(f, config, name))
        return total
    outcome = run_suite(f, config, config.suite)
    if not outcome.reports and outcome.skip_errors:
        raise outcome.skip_errors[0]
    return outcome


def tolerance_overrides(config: SuiteConfig) -> dict[str, float]:
    """套件配置中给出的容差覆盖，键为 Config 属性名。"""
    overrides: dict[str, float] = {}
    if config.tol_check is not None:
        overrides["TOL_CHECK"] = config.tol_check
    if config.tol_eq is not None:
        overrides["TOL_EQ"] = config.tol_eq
    return overrides


def make_header(config: SuiteConfig, spec: Any) -> ReportHeader:
    tolerances = Config().tolerances()
    if config.tol_check is not None:
        tolerances["tol_check"] = config.tol_check
    if config.tol_eq is not None:
        tolerances["tol_eq"] = config.tol_eq
    return ReportHeader(
        version=__version__,
        seed=config.seed,
        suite=config.suite,
        tolerances=tolerances,
        spec=spec,
    )


def _run_safe(f: SelfMap, config: SuiteConfig) -> SuiteOutcome | EngineError:
    try:
        return run_map(f, config)
    except EngineError as e:
        logger.error(f"{f.name} 执行失败: [{e.code}] {e.message}")
        return e


def verify(maps: Sequence[SelfMap], config: SuiteConfig, spec: Any = None) -> ReportDocument:
    """
    对每个映射运行套件，线程池并发、按输入顺序汇总。
    任一映射抛出 EngineError 时，document.error 记录输入顺序中的第一个。
    """
    cfg = Config()
    workers = min(cfg.THREADS, max(len(maps), 1))
    with (
        cfg.override(**tolerance_overrides(config)),
        ThreadPoolExecutor(max_workers=workers) as pool,
    ):
        results = list(pool.map(partial(_run_safe, config=config), maps))

    document = ReportDocument(header=make_header(config, spec))
    for result in results:
        if isinstance(result, EngineError):
            if document.error is None:
                document.error = ErrorInfo(**result.to_dict())
            continue
        document.reports.extend(result.reports)
        document.skipped.extend(result.skipped)
    return document


# ---------------------------------------------------------------------------
# β 测量
# ---------------------------------------------------------------------------
BETA_METHODS = ("exact", "radial", "both")


def _pair(p: complex) -> list[float]:
    return [p.real, p.imag]


def measure_beta(f: SelfMap, sigma: complex, method: str = "exact") -> BetaReport:
    """
    σ 处的边界伸缩系数。
    - exact：仅限精确有理映射
    - radial：径向外推
    - both：两者都算，discrepancy 为相对偏差 |radial - exact| / exact
    β = +∞ 时两种方法的 discrepancy 记为 None。
    """
    s = BoundaryPoint(sigma)
    if method not in BETA_METHODS:
        raise EngineError(SPEC_VALIDATION_ERROR, f"未知的 β 方法: {method}")
    primary = beta_radial(f, s.value) if method == "radial" else beta_exact(f, s.value)
    discrepancy = None
    if method == "both":
        radial = beta_radial(f, s.value)
        if primary.is_finite and radial.is_finite:
            discrepancy = abs(radial.beta - primary.beta) / primary.beta
        elif primary.is_finite != radial.is_finite:
            discrepancy = math.inf
        logger.info(f"β 精确值 {primary.beta:.12g}，径向外推 {radial.beta:.12g}")
    return BetaReport(
        sigma=_pair(s.value),
        tau=_pair(primary.tau.value) if primary.tau is not None else None,
        beta=primary.beta,
        method=str(primary.method) if method != "both" else "both",
        confidence=primary.confidence,
        discrepancy=discrepancy,
    )
