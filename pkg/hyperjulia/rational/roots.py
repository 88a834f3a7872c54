"""多项式求根 — Aberth–Ehrlich 同时迭代，停滞时随机扰动重启，最后 Newton 精修。"""

from __future__ import annotations

import logging

import numpy as np
from numpy.polynomial import polynomial as npoly

from hyperjulia.config import Config
from hyperjulia.errors import PRECONDITION_FAILED, ROOT_NOT_CONVERGED, EngineError
from hyperjulia.rational.polynomial import Polynomial

logger = logging.getLogger("hyperjulia")

_EPS = np.finfo(float).eps
_STAGNATION_WINDOW = 25


def _relative_residuals(coeffs: np.ndarray, x: np.ndarray) -> np.ndarray:
    scale = npoly.polyval(np.abs(x), np.abs(coeffs))
    return np.abs(npoly.polyval(x, coeffs)) / np.maximum(scale, 1e-300)


def _aberth_step(coeffs: np.ndarray, deriv: np.ndarray, x: np.ndarray) -> np.ndarray:
    pv = npoly.polyval(x, coeffs)
    dv = npoly.polyval(x, deriv)
    diff = x[:, None] - x[None, :]
    np.fill_diagonal(diff, 1.0)
    inv = 1.0 / diff
    np.fill_diagonal(inv, 0.0)
    with np.errstate(divide="ignore", invalid="ignore"):
        ratio = pv / dv
        return ratio / (1.0 - ratio * inv.sum(axis=1))


def _newton_polish(
    coeffs: np.ndarray, deriv: np.ndarray, x: np.ndarray, steps: int = 4
) -> np.ndarray:
    x = x.copy()
    for _ in range(steps):
        with np.errstate(divide="ignore", invalid="ignore"):
            candidate = x - npoly.polyval(x, coeffs) / npoly.polyval(x, deriv)
        better = np.isfinite(candidate) & (
            _relative_residuals(coeffs, candidate) < _relative_residuals(coeffs, x)
        )
        if not better.any():
            break
        x = np.where(better, candidate, x)
    return x


def polynomial_roots(
    p: Polynomial,
    *,
    residual: float | None = None,
    max_iter: int | None = None,
    seed: int = 0,
) -> np.ndarray:
    """
    返回 p 的全部根 (按模长、辐角排序)。
    - 每个根满足 |p(root)| <= residual · Σ|c_k||root|^k
    - 迭代上限内未达到残差要求 → EngineError(ROOT_NOT_CONVERGED)，detail 给出最佳残差
    """
    cfg = Config()
    residual = cfg.ROOT_RESIDUAL if residual is None else residual
    max_iter = cfg.ROOT_MAX_ITER if max_iter is None else max_iter
    n = p.degree
    if n < 1:
        raise EngineError(PRECONDITION_FAILED, f"求根要求次数 >= 1，实际次数 {n}")

    coeffs = p.as_array() / p.leading
    if n == 1:
        return np.array([-coeffs[0]])
    deriv = npoly.polyder(coeffs)

    # Cauchy 界给出初值圆，辐角错开以避免对称停滞
    radius = 1.0 + float(np.max(np.abs(coeffs[:-1])))
    x = radius * np.exp(1j * (2.0 * np.pi * np.arange(n) / n + 0.4))
    rng = np.random.default_rng(seed)

    best = np.inf
    best_x = x
    last_improvement = 0
    for iteration in range(max_iter):
        delta = _aberth_step(coeffs, deriv, x)
        if not np.all(np.isfinite(delta)):
            x = x + 1e-3 * radius * (rng.standard_normal(n) + 1j * rng.standard_normal(n))
            logger.debug(f"Aberth 第 {iteration} 步出现非有限修正，随机扰动重启")
            continue
        x = x - delta
        current = float(np.max(_relative_residuals(coeffs, x)))
        if current < 0.5 * best:
            best, best_x, last_improvement = current, x.copy(), iteration
        if np.all(np.abs(delta) <= 4 * _EPS * (1.0 + np.abs(x))) or current <= 16 * _EPS:
            break
        if iteration - last_improvement > _STAGNATION_WINDOW and best > residual:
            x = best_x + 1e-6 * radius * (rng.standard_normal(n) + 1j * rng.standard_normal(n))
            last_improvement = iteration
            logger.debug(f"Aberth 停滞 (最佳残差 {best:.3e})，扰动重启")

    if float(np.max(_relative_residuals(coeffs, x))) > best:
        x = best_x
    x = _newton_polish(coeffs, deriv, x)
    final = float(np.max(_relative_residuals(coeffs, x)))
    if final > residual:
        raise EngineError(
            ROOT_NOT_CONVERGED,
            f"求根未收敛: 次数 {n}，迭代上限 {max_iter}",
            detail=f"best residual {final:.3e}",
        )
    order = np.lexsort((np.angle(x), np.round(np.abs(x), 12)))
    return x[order]


def count_inside(roots: np.ndarray, radius: float = 1.0) -> int:
    """位于 |z| < radius 的根数。"""
    return int(np.sum(np.abs(roots) < radius))
