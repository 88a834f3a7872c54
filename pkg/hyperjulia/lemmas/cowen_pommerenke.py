"""Cowen–Pommerenke 型估计：内部不动点处的导数控制边界不动点的伸缩系数之和。"""

from __future__ import annotations

import logging
import math
from collections.abc import Sequence

from hyperjulia.boundary.dilation import BoundaryDilation
from hyperjulia.boundary.fixed_points import fixed_point_condition
from hyperjulia.config import Config
from hyperjulia.errors import PRECONDITION_FAILED, EngineError
from hyperjulia.geometry.disk import (
    BoundaryPoint,
    DiskPoint,
    PointLike,
    as_complex,
    conditioning,
    horocycle_functional,
)
from hyperjulia.hdq.selfmap import SelfMap
from hyperjulia.lemmas.julia import finite_dilation, reject_automorphism
from hyperjulia.lemmas.report import build_report, radial_widen
from hyperjulia.result.models import VerificationReport

logger = logging.getLogger("hyperjulia")

_FIXED_POINT_TOL = 1e-10
_BOUNDARY_FIXED_TOL = 1e-8
_VANISHING_TOL = 1e-8


def _degenerate_report(
    name: str, rhs: float, expected: bool | None, inputs: dict, reason: str
) -> VerificationReport:
    """分母退化：lhs = +∞，holds = False，附诊断信息。"""
    logger.warning(f"{name} 分母退化: {reason}")
    return build_report(
        name,
        math.inf,
        rhs,
        equality_expected=expected,
        inputs=inputs,
        diagnostic=reason,
    )


def _require_vanishing(f: SelfMap, z0: complex, k: int) -> complex:
    """检查 f(z₀) = z₀ 与 f'(z₀) = … = f^{(k-1)}(z₀) = 0，返回 f^{(k)}(z₀)。"""
    data = f.taylor(z0, k)
    if abs(data.coefficients[0] - z0) > _VANISHING_TOL:
        raise EngineError(PRECONDITION_FAILED, f"z₀ = {z0} 不是 {f.name} 的不动点")
    for n in range(1, k):
        if abs(data.coefficients[n]) > _VANISHING_TOL:
            raise EngineError(
                PRECONDITION_FAILED,
                f"{f.name} 在 z₀ = {z0} 处 {n} 阶导数不为零: {abs(data.coefficients[n]):.3e}",
            )
    return data.coefficients[k]


def _rhs(c: complex) -> float:
    return (1.0 - abs(c) ** 2) / abs(1.0 - c) ** 2


def cowen_pommerenke(
    f: SelfMap,
    z0: PointLike,
    sigmas: Sequence[PointLike],
    betas: Sequence[float],
) -> VerificationReport:
    """Σ 1/(β_j - 1) <= (1-|f'(z₀)|²)/|1-f'(z₀)|²，等号当且仅当 f ∈ ℬ_{n+1}。"""
    zv = DiskPoint(as_complex(z0)).value
    if abs(f(zv) - zv) > _FIXED_POINT_TOL:
        raise EngineError(PRECONDITION_FAILED, f"z₀ = {zv} 不是 {f.name} 的不动点")
    reject_automorphism(f)
    points = [BoundaryPoint(as_complex(s)).value for s in sigmas]
    for s in points:
        if abs(f(s) - s) > _BOUNDARY_FIXED_TOL:
            raise EngineError(PRECONDITION_FAILED, f"σ = {s} 不是 {f.name} 的边界不动点")

    derivative = f.derivative(zv)
    rhs = _rhs(derivative)
    expected = f.blaschke_degree_is(len(points) + 1)
    inputs = {"map": f.describe(), "z0": zv, "sigmas": points, "betas": list(betas)}
    if any(b <= 1.0 + 1e-12 for b in betas):
        return _degenerate_report("cowen_pommerenke", rhs, expected, inputs, "β_j <= 1")
    lhs = sum(1.0 / (b - 1.0) for b in betas)
    return build_report("cowen_pommerenke", lhs, rhs, equality_expected=expected, inputs=inputs)


def cowen_pommerenke_multiple(
    f: SelfMap,
    z0: PointLike,
    k: int,
    sigmas: Sequence[PointLike],
    betas: Sequence[float],
) -> VerificationReport:
    """
    z₀ 为 k 重不动点时：
    Σ 1/((1 + 2Re[(f(σ_j)-σ_j)z̄₀/|f(σ_j)-z₀|²])β_j - k) <= (1-|c|²)/|1-c|²，
    c = f^{(k)}(z₀)(1-|z₀|²)^{k-1}/k!；等号当且仅当 f ∈ ℬ_{n+k}。
    """
    if k < 1:
        raise EngineError(PRECONDITION_FAILED, f"k 必须 >= 1，实际 {k}")
    zv = DiskPoint(as_complex(z0)).value
    if f.blaschke_degree_at_most(k):
        raise EngineError(PRECONDITION_FAILED, f"{f.name} 是次数 <= {k} 的 Blaschke 乘积")
    top = _require_vanishing(f, zv, k)
    points = [BoundaryPoint(as_complex(s)).value for s in sigmas]
    for s in points:
        required = fixed_point_condition(zv, k, s).value
        if abs(f(s) - required) > _BOUNDARY_FIXED_TOL:
            raise EngineError(
                PRECONDITION_FAILED,
                f"σ = {s} 不满足 k = {k} 的边界条件: |f(σ) - 目标| = {abs(f(s) - required):.3e}",
            )

    c = top * (1.0 - abs(zv) ** 2) ** (k - 1) / math.factorial(k)
    rhs = _rhs(c)
    expected = f.blaschke_degree_is(len(points) + k)
    inputs = {"map": f.describe(), "z0": zv, "k": k, "sigmas": points, "betas": list(betas)}

    denominators: list[float] = []
    for s, beta in zip(points, betas, strict=True):
        fs = f(s)
        weight = 1.0 + 2.0 * ((fs - s) * zv.conjugate()).real / abs(fs - zv) ** 2
        denominators.append(weight * beta - k)
    if any(d <= 1e-12 for d in denominators):
        reason = f"分母非正: {denominators}，β 或 σ 集合不一致"
        return _degenerate_report("cowen_pommerenke_multiple", rhs, expected, inputs, reason)
    lhs = sum(1.0 / d for d in denominators)
    return build_report(
        "cowen_pommerenke_multiple", lhs, rhs, equality_expected=expected, inputs=inputs
    )


def check_proposition_CPn(
    f: SelfMap,
    k: int,
    sigma: PointLike,
    z: PointLike,
    *,
    dilation: BoundaryDilation | None = None,
) -> VerificationReport:
    """
    f 在 0 处 k 阶消失时，g = f/z^k：
    |g(σ) - g(z)|²/(1-|g(z)|²) <= (β-k)|σ-z|²/(1-|z|²)，z = 0 时 g(0) = f^{(k)}(0)/k!。
    """
    if k < 1:
        raise EngineError(PRECONDITION_FAILED, f"k 必须 >= 1，实际 {k}")
    if f.blaschke_degree_at_most(k):
        raise EngineError(PRECONDITION_FAILED, f"{f.name} 是次数 <= {k} 的 Blaschke 乘积")
    s = BoundaryPoint(as_complex(sigma)).value
    zv = DiskPoint(as_complex(z)).value
    data = f.taylor(0j, k)
    for n in range(k):
        if abs(data.coefficients[n]) > _VANISHING_TOL:
            raise EngineError(PRECONDITION_FAILED, f"{f.name} 在 0 处 {n} 阶导数不为零")
    dil = finite_dilation(f, s, dilation)
    assert dil.tau is not None

    gz = data.taylor_coefficient(k) if zv == 0 else f(zv) / zv**k
    g_sigma = dil.tau.value / s**k
    expected = f.blaschke_degree_is(k + 1)
    inputs = {"map": f.describe(), "k": k, "sigma": s, "z": zv, "beta": dil.beta}
    rhs = (dil.beta - k) * horocycle_functional(s, zv)
    den = 1.0 - abs(gz) ** 2
    if den < Config().DEGENERATE_TOL:
        return _degenerate_report("proposition_CPn", rhs, expected, inputs, "|f(z)/z^k| = 1")
    lhs = abs(g_sigma - gz) ** 2 / den
    return build_report(
        "proposition_CPn",
        lhs,
        rhs,
        equality_expected=expected,
        inputs=inputs,
        widen=radial_widen(dil.confidence, dil.beta, rhs),
        conditioning=conditioning(zv),
    )


def check_corollary_CP(
    f: SelfMap,
    sigma: PointLike,
    z: PointLike,
    *,
    dilation: BoundaryDilation | None = None,
) -> list[VerificationReport]:
    """
    f(0) = 0 时的三条不等式，等号当且仅当 f ∈ ℬ₂：
    - z ≠ 0：|f(σ)/σ - f(z)/z|²/(1-|f(z)/z|²) <= (β-1)|σ-z|²/(1-|z|²)
    - |f(σ)/σ - f'(0)|²/(1-|f'(0)|²) <= β - 1
    - f(σ) = σ 时：|1 - f'(0)|²/(1-|f'(0)|²) <= β - 1
    """
    if abs(f(0j)) > _FIXED_POINT_TOL:
        raise EngineError(PRECONDITION_FAILED, f"{f.name} 不满足 f(0) = 0")
    reject_automorphism(f)
    s = BoundaryPoint(as_complex(sigma)).value
    zv = DiskPoint(as_complex(z)).value
    dil = finite_dilation(f, s, dilation)
    assert dil.tau is not None
    tau = dil.tau.value
    expected = f.blaschke_degree_is(2)
    beta_1 = dil.beta - 1.0
    base = {"map": f.describe(), "sigma": s, "beta": dil.beta}
    tol = Config().DEGENERATE_TOL
    reports: list[VerificationReport] = []

    if zv != 0:
        gz = f(zv) / zv
        rhs = beta_1 * horocycle_functional(s, zv)
        inputs = {**base, "z": zv}
        if 1.0 - abs(gz) ** 2 < tol:
            reports.append(
                _degenerate_report("corollary_CP_z", rhs, expected, inputs, "|f(z)/z| = 1")
            )
        else:
            reports.append(
                build_report(
                    "corollary_CP_z",
                    abs(tau / s - gz) ** 2 / (1.0 - abs(gz) ** 2),
                    rhs,
                    equality_expected=expected,
                    inputs=inputs,
                    widen=radial_widen(dil.confidence, dil.beta, rhs),
                    conditioning=conditioning(zv),
                )
            )

    d0 = f.derivative(0j)
    den = 1.0 - abs(d0) ** 2
    widen = radial_widen(dil.confidence, dil.beta, beta_1)
    if den < tol:
        reports.append(
            _degenerate_report("corollary_CP_origin", beta_1, expected, base, "|f'(0)| = 1")
        )
        return reports
    reports.append(
        build_report(
            "corollary_CP_origin",
            abs(tau / s - d0) ** 2 / den,
            beta_1,
            equality_expected=expected,
            inputs=base,
            widen=widen,
        )
    )
    if abs(tau - s) <= _BOUNDARY_FIXED_TOL:
        reports.append(
            build_report(
                "corollary_CP_fixed",
                abs(1.0 - d0) ** 2 / den,
                beta_1,
                equality_expected=expected,
                inputs=base,
                widen=widen,
            )
        )
    return reports


def check_proposition_2CP(
    f: SelfMap,
    sigma: PointLike,
    z: PointLike,
    *,
    dilation: BoundaryDilation | None = None,
) -> VerificationReport:
    """
    原点双重链 (w₁ = w₂ = 0) 上的多点 Julia 引理，f(0) = 0：
    A = σ̄(f(σ)σ̄ - f'(0))/(1 - f'(0)̄f(σ)σ̄)，G(z) = (f(z)/z - f'(0))/(z(1 - f'(0)̄f(z)/z))，
    G(0) = f″(0)/(2(1-|f'(0)|²))；
    |A - G(z)|²/(1-|G(z)|²) <= |σ-z|²/(1-|z|²)·[(1-|f'(0)|²)/|f(σ)/σ - f'(0)|²·(β-1) - 1]。
    """
    if abs(f(0j)) > _FIXED_POINT_TOL:
        raise EngineError(PRECONDITION_FAILED, f"{f.name} 不满足 f(0) = 0")
    if f.blaschke_degree_at_most(2):
        raise EngineError(PRECONDITION_FAILED, f"{f.name} 是次数 <= 2 的 Blaschke 乘积")
    s = BoundaryPoint(as_complex(sigma)).value
    zv = DiskPoint(as_complex(z)).value
    dil = finite_dilation(f, s, dilation)
    assert dil.tau is not None
    tau = dil.tau.value
    tol = Config().DEGENERATE_TOL
    expected = f.blaschke_degree_is(3)
    inputs = {"map": f.describe(), "sigma": s, "z": zv, "beta": dil.beta}

    data = f.taylor(0j, 2)
    d0 = data.coefficients[1]
    den0 = 1.0 - abs(d0) ** 2
    if den0 < tol:
        raise EngineError(PRECONDITION_FAILED, f"|f'(0)| = 1，{f.name} 为 z 乘自同构")
    g_sigma = tau / s
    gap_sigma = abs(g_sigma - d0) ** 2
    factor = den0 / gap_sigma * (dil.beta - 1.0) - 1.0 if gap_sigma > 0 else math.inf
    rhs = horocycle_functional(s, zv) * factor

    a_value = s.conjugate() * (g_sigma - d0) / (1.0 - d0.conjugate() * g_sigma)
    if zv == 0:
        g_value = data.coefficients[2] / (2.0 * den0)
    else:
        gz = f(zv) / zv
        g_value = (gz - d0) / (zv * (1.0 - d0.conjugate() * gz))
    den = 1.0 - abs(g_value) ** 2
    if den < tol or not math.isfinite(rhs):
        return _degenerate_report("proposition_2CP", rhs, expected, inputs, "原点双重链分母退化")
    return build_report(
        "proposition_2CP",
        abs(a_value - g_value) ** 2 / den,
        rhs,
        equality_expected=expected,
        inputs=inputs,
        widen=radial_widen(dil.confidence, dil.beta, rhs),
        conditioning=conditioning(zv),
    )
