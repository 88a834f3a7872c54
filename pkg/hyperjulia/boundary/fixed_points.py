"""单位圆周上 f(σ) = target(σ) 的求解：相位采样 + 二分。"""

from __future__ import annotations

import logging
from collections.abc import Callable

import numpy as np

from hyperjulia.config import Config
from hyperjulia.errors import PRECONDITION_FAILED, EngineError
from hyperjulia.geometry.disk import BoundaryPoint, PointLike, as_complex, gamma
from hyperjulia.hdq.selfmap import SelfMap

logger = logging.getLogger("hyperjulia")

type BoundaryTarget = Callable[[np.ndarray], np.ndarray]

_HIT_TOL = 1e-13
_BISECTION_STEPS = 60
_DEDUPE_TOL = 1e-9
_ACCEPT_TOL = 1e-8


def fixed_point_condition(z0: PointLike, k: int, sigma: PointLike) -> BoundaryPoint:
    """f(σ) 应取的值：γ_{z₀}^{-1}(γ_{z₀}(σ)^k)；z₀ = 0 时为 σ^k，k = 1 时为 σ。"""
    if k < 1:
        raise EngineError(PRECONDITION_FAILED, f"k 必须 >= 1，实际 {k}")
    zv = as_complex(z0)
    power = gamma(zv, as_complex(sigma)) ** k
    return BoundaryPoint((power + zv) / (1.0 + zv.conjugate() * power))


def _condition_target(z0: complex, k: int) -> BoundaryTarget:
    def target(s: np.ndarray) -> np.ndarray:
        power = ((s - z0) / (1.0 - z0.conjugate() * s)) ** k
        return (power + z0) / (1.0 + z0.conjugate() * power)

    return target


def boundary_solutions(
    f: SelfMap,
    target: BoundaryTarget,
    samples: int | None = None,
) -> list[BoundaryPoint]:
    """
    在 ∂𝔻 上求 f(σ) = target(σ) 的全部解 (仅限精确有理映射)。
    相位 ψ(t) = arg(f·conj(target)) 在 |ψ| < π/2 内变号处二分；
    命中点过多 (解集退化，如 f = target) 时报 PRECONDITION_FAILED。
    """
    if not f.is_exact:
        raise EngineError(PRECONDITION_FAILED, f"{f.name} 不是精确有理映射，无法搜索边界解")
    n = Config().FIXED_POINT_SAMPLES if samples is None else samples
    t = 2.0 * np.pi * np.arange(n + 1) / n

    def phase(angles: np.ndarray) -> np.ndarray:
        s = np.exp(1j * angles)
        return np.angle(f(s) * np.conj(target(s)))

    psi = phase(t)
    hits = np.flatnonzero(np.abs(psi[:-1]) < _HIT_TOL)
    if len(hits) > n // 4:
        raise EngineError(
            PRECONDITION_FAILED,
            f"{f.name} 的边界解集退化: {len(hits)} 个采样点命中",
        )

    roots: list[float] = [float(t[i]) for i in hits]
    crossing = (np.sign(psi[:-1]) * np.sign(psi[1:]) < 0) & (np.abs(psi[:-1]) < np.pi / 2) & (
        np.abs(psi[1:]) < np.pi / 2
    )
    for i in np.flatnonzero(crossing):
        lo, hi = float(t[i]), float(t[i + 1])
        psi_lo = float(psi[i])
        for _ in range(_BISECTION_STEPS):
            mid = 0.5 * (lo + hi)
            psi_mid = float(phase(np.array([mid]))[0])
            if psi_mid == 0.0:
                lo = hi = mid
                break
            if np.sign(psi_mid) == np.sign(psi_lo):
                lo, psi_lo = mid, psi_mid
            else:
                hi = mid
        roots.append(0.5 * (lo + hi))

    solutions: list[BoundaryPoint] = []
    for angle in sorted(roots):
        s = complex(np.exp(1j * angle))
        if any(abs(s - p.value) <= _DEDUPE_TOL for p in solutions):
            continue
        residual = abs(f(s) - complex(target(np.array([s]))[0]))
        if residual <= _ACCEPT_TOL:
            solutions.append(BoundaryPoint(s))
    if len(solutions) > 1 and abs(solutions[0].value - solutions[-1].value) <= _DEDUPE_TOL:
        solutions.pop()
    logger.debug(f"{f.name} 边界解: {[round(p.angle, 12) for p in solutions]}")
    return solutions


def boundary_fixed_points(f: SelfMap, samples: int | None = None) -> list[BoundaryPoint]:
    """f(σ) = σ 的边界解。"""
    return boundary_solutions(f, lambda s: s, samples)


def multiple_fixed_point_sigmas(
    f: SelfMap,
    z0: PointLike,
    k: int,
    samples: int | None = None,
) -> list[BoundaryPoint]:
    """满足 f(σ) = fixed_point_condition(z₀, k, σ) 的边界点。"""
    if k < 1:
        raise EngineError(PRECONDITION_FAILED, f"k 必须 >= 1，实际 {k}")
    return boundary_solutions(f, _condition_target(as_complex(z0), k), samples)
