"""有限 Blaschke 乘积 — 因式形式 (θ, zeros) 存储，求值、导数与自同构复合。"""

from __future__ import annotations

import cmath
import logging
from collections.abc import Sequence
from dataclasses import dataclass
from typing import overload

import numpy as np

from hyperjulia.config import Config
from hyperjulia.errors import (
    CERTIFICATION_FAILED,
    INVALID_POINT,
    POLE_ERROR,
    EngineError,
)
from hyperjulia.geometry.disk import PointLike, as_complex, automorphism, inverse_automorphism
from hyperjulia.rational.polynomial import Polynomial, RationalMap
from hyperjulia.rational.roots import polynomial_roots

logger = logging.getLogger("hyperjulia")

type AutomorphismParams = tuple[float, PointLike]


@dataclass(frozen=True)
class BlaschkeProduct:
    """B(z) = e^{iθ} ∏ (z - a_j)/(1 - ā_j z)，次数 = 零点个数 (计重数)。"""

    theta: float
    zeros: tuple[complex, ...] = ()

    def __post_init__(self) -> None:
        zeros = tuple(as_complex(a) for a in self.zeros)
        limit = 1.0 - Config().ZERO_MARGIN
        for i, a in enumerate(zeros):
            if not abs(a) <= limit:
                raise EngineError(
                    INVALID_POINT,
                    f"zeros[{i}] 必须满足 |a| <= {limit}，实际 |a| = {abs(a)}",
                )
        object.__setattr__(self, "zeros", zeros)
        object.__setattr__(self, "theta", float(self.theta))

    @classmethod
    def automorphism(cls, theta: float, a: PointLike) -> BlaschkeProduct:
        """e^{iθ}γ_a，一次 Blaschke 乘积。"""
        return cls(theta, (as_complex(a),))

    @classmethod
    def monomial(cls, k: int, theta: float = 0.0) -> BlaschkeProduct:
        return cls(theta, (0j,) * k)

    @property
    def degree(self) -> int:
        return len(self.zeros)

    @property
    def phase(self) -> complex:
        return cmath.exp(1j * self.theta)

    @overload
    def __call__(self, z: complex) -> complex: ...
    @overload
    def __call__(self, z: np.ndarray) -> np.ndarray: ...
    def __call__(self, z):
        return blaschke_eval(self, z)

    def derivative(self, z: complex) -> complex:
        return blaschke_derivative(self, z)

    def __mul__(self, other: BlaschkeProduct) -> BlaschkeProduct:
        return BlaschkeProduct(self.theta + other.theta, self.zeros + other.zeros)

    def to_rational(self) -> RationalMap:
        """展开为 P/Q，P = e^{iθ}∏(z - a_j)，Q = ∏(1 - ā_j z)。"""
        numerator = Polynomial.from_roots(self.zeros, leading=self.phase)
        denominator = Polynomial.constant(1.0)
        for a in self.zeros:
            denominator = denominator * Polynomial((1.0, -a.conjugate()))
        return RationalMap(numerator, denominator)


def blaschke_eval(B: BlaschkeProduct, z):
    """逐因子求值，支持 numpy 数组。"""
    zv = np.asarray(z, dtype=complex)
    result = np.full(zv.shape, B.phase, dtype=complex)
    pole_tol = Config().POLE_TOL
    for a in B.zeros:
        den = 1.0 - a.conjugate() * zv
        if np.any(np.abs(den) < pole_tol):
            raise EngineError(POLE_ERROR, f"Blaschke 因子在 {z} 处遇到极点 (a = {a})")
        result = result * (zv - a) / den
    if np.ndim(z) == 0 and not isinstance(z, np.ndarray):
        return complex(result)
    return result


def blaschke_derivative(B: BlaschkeProduct, z: PointLike) -> complex:
    """对数导数求和 B' = B·Σ[1/(z-a_j) + ā_j/(1-ā_j z)]；z 贴近零点时改用乘积法则。"""
    zv = as_complex(z)
    if B.degree == 0:
        return 0j
    dens = [1.0 - a.conjugate() * zv for a in B.zeros]
    if min(abs(d) for d in dens) < Config().POLE_TOL:
        raise EngineError(POLE_ERROR, f"Blaschke 导数在 {zv} 处遇到极点")
    if min(abs(zv - a) for a in B.zeros) > 1e-8:
        total = sum(
            1.0 / (zv - a) + a.conjugate() / d for a, d in zip(B.zeros, dens, strict=True)
        )
        return blaschke_eval(B, zv) * total
    factors = [(zv - a) / d for a, d in zip(B.zeros, dens, strict=True)]
    derivs = [(1.0 - abs(a) ** 2) / d**2 for a, d in zip(B.zeros, dens, strict=True)]
    total = 0j
    for j, dj in enumerate(derivs):
        term = dj
        for i, fi in enumerate(factors):
            if i != j:
                term *= fi
        total += term
    return B.phase * total


def _fit_phase(target, zeros: Sequence[complex]) -> float:
    """在边界上挑一个远离全部零点的点，反解出 e^{iθ}。"""
    candidates = np.exp(2j * np.pi * (np.arange(16) + 0.25) / 16)
    if zeros:
        gaps = [min(abs(s - a) for a in zeros) for s in candidates]
        sigma = complex(candidates[int(np.argmax(gaps))])
    else:
        sigma = complex(candidates[0])
    partial = blaschke_eval(BlaschkeProduct(0.0, tuple(zeros)), sigma)
    return cmath.phase(target(sigma) / partial)


def blaschke_conjugate(
    B: BlaschkeProduct,
    pre: AutomorphismParams = (0.0, 0j),
    post: AutomorphismParams = (0.0, 0j),
) -> BlaschkeProduct:
    """
    γ₂∘B∘γ₁ 的 Blaschke 形式，γ_i(z) = e^{iθ_i}γ_{a_i}(z)，次数不变。
    - 前复合的零点为 γ₁^{-1}(a_j)，直接给出
    - 后复合的零点由 P - a₂Q 求根并 Newton 精修到 POLISH_RESIDUAL
    """
    t1, a1 = pre[0], as_complex(pre[1])
    t2, a2 = post[0], as_complex(post[1])
    inv_t, inv_a = inverse_automorphism(t1, a1)

    def composite(z: complex) -> complex:
        return automorphism(t2, a2, blaschke_eval(B, automorphism(t1, a1, z)))

    zeros: tuple[complex, ...] = tuple(automorphism(inv_t, inv_a, a) for a in B.zeros)
    if a2 != 0 and B.degree > 0:
        inner = BlaschkeProduct(
            _fit_phase(lambda s: blaschke_eval(B, automorphism(t1, a1, s)), zeros), zeros
        )
        rational = inner.to_rational()
        transformed = rational.numerator - rational.denominator * a2
        roots = polynomial_roots(transformed, residual=Config().POLISH_RESIDUAL)
        if len(roots) != B.degree or np.any(np.abs(roots) >= 1.0):
            raise EngineError(
                CERTIFICATION_FAILED,
                f"复合后零点个数与次数不符: 期望 {B.degree} 个圆盘内零点",
                detail=f"roots={roots.tolist()}",
            )
        zeros = tuple(complex(r) for r in roots)
    result = BlaschkeProduct(_fit_phase(composite, zeros), zeros)
    logger.debug(f"Blaschke 复合完成: 次数 {result.degree}, θ = {result.theta:.6f}")
    return result


def rational_to_blaschke(R: RationalMap) -> BlaschkeProduct:
    """从边界单模的有理映射中提取零点，得到因式形式。"""
    if R.numerator.degree < 1:
        return BlaschkeProduct(cmath.phase(R(1.0 + 0j)))
    roots = polynomial_roots(R.numerator)
    if np.any(np.abs(roots) >= 1.0):
        raise EngineError(CERTIFICATION_FAILED, "分子存在圆盘外零点，不是 Blaschke 乘积")
    zeros = tuple(complex(r) for r in roots)
    return BlaschkeProduct(_fit_phase(R, zeros), zeros)
