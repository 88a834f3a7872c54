"""Poincaré 圆盘几何原语 — 自同构、双曲距离、极限圆 (horocycle) 与 Stolz 区域。

所有函数接受 DiskPoint / BoundaryPoint / 复数，内部统一转为 complex 计算。
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from hyperjulia.config import Config
from hyperjulia.errors import INVALID_POINT, POLE_ERROR, EngineError

type PointLike = DiskPoint | BoundaryPoint | complex | float


def as_complex(p: PointLike) -> complex:
    """把点统一转为 complex。"""
    if isinstance(p, (DiskPoint, BoundaryPoint)):
        return p.value
    return complex(p)


@dataclass(frozen=True, slots=True)
class DiskPoint:
    """单位圆盘内点，|value| < 1 - DISK_MARGIN。"""

    value: complex

    def __post_init__(self) -> None:
        v = complex(self.value)
        margin = Config().DISK_MARGIN
        if cmath.isnan(v) or not abs(v) < 1.0 - margin:
            raise EngineError(INVALID_POINT, f"圆盘内点要求 |z| < 1 - {margin}，实际 z = {v}")
        object.__setattr__(self, "value", v)

    @property
    def conditioning(self) -> float:
        return conditioning(self.value)

    def __complex__(self) -> complex:
        return self.value


@dataclass(frozen=True, slots=True)
class BoundaryPoint:
    """单位圆周上的点；构造时重新归一化为精确单位模长。"""

    value: complex

    def __post_init__(self) -> None:
        v = complex(self.value)
        tol = Config().BOUNDARY_TOL
        if cmath.isnan(v) or abs(abs(v) - 1.0) > tol:
            raise EngineError(INVALID_POINT, f"边界点要求 ||σ| - 1| <= {tol}，实际 |σ| = {abs(v)}")
        object.__setattr__(self, "value", v / abs(v))

    @classmethod
    def from_angle(cls, theta: float) -> BoundaryPoint:
        return cls(cmath.exp(1j * theta))

    @property
    def angle(self) -> float:
        return cmath.phase(self.value)

    def __complex__(self) -> complex:
        return self.value


@dataclass(frozen=True, slots=True)
class Horocycle:
    """极限圆 E(σ, R) = {z : |σ-z|²/(1-|z|²) < R}，在 σ 处内切于单位圆。"""

    center: BoundaryPoint
    radius: float

    def __post_init__(self) -> None:
        if not (self.radius > 0 and math.isfinite(self.radius)):
            raise EngineError(INVALID_POINT, f"极限圆半径必须为正有限数: {self.radius}")

    @property
    def euclidean_radius(self) -> float:
        return self.radius / (self.radius + 1.0)

    def contains(self, z: PointLike) -> bool:
        return horocycle_functional(self.center, z) < self.radius


@dataclass(frozen=True, slots=True)
class StolzRegion:
    """Stolz 区域 K(τ, M) = {z : |τ-z|/(1-|z|) < M}；M <= 1 时为空集。"""

    vertex: BoundaryPoint
    amplitude: float

    @property
    def is_empty(self) -> bool:
        return self.amplitude <= 1.0


# ---------------------------------------------------------------------------
# 自同构
# ---------------------------------------------------------------------------
def gamma(w: PointLike, z: PointLike) -> complex:
    """γ_w(z) = (z - w)/(1 - w̄z)。"""
    wv, zv = as_complex(w), as_complex(z)
    den = 1.0 - wv.conjugate() * zv
    if abs(den) < Config().POLE_TOL:
        raise EngineError(POLE_ERROR, f"γ_w 在 z = {zv} 处遇到极点 (w = {wv})")
    return (zv - wv) / den


def gamma_inverse(w: PointLike, z: PointLike) -> complex:
    """γ_w 的逆：(z + w)/(1 + w̄z)。"""
    return gamma(-as_complex(w), z)


def automorphism(theta: float, a: PointLike, z: PointLike) -> complex:
    """e^{iθ}γ_a(z)。"""
    return cmath.exp(1j * theta) * gamma(a, z)


def inverse_automorphism(theta: float, a: PointLike) -> tuple[float, complex]:
    """(θ, a) 参数化自同构的逆，仍以 (θ', a') 形式返回。"""
    av = as_complex(a)
    return -theta, -av * cmath.exp(1j * theta)


def phi(w: PointLike, z: PointLike) -> complex:
    """对合自同构 φ_w(z) = (w - z)/(1 - w̄z) = -γ_w(z)。"""
    return -gamma(w, z)


# ---------------------------------------------------------------------------
# 距离
# ---------------------------------------------------------------------------
def pseudo_distance(z: PointLike, w: PointLike) -> float:
    """伪双曲距离 |γ_w(z)|。"""
    return abs(gamma(w, z))


def poincare_distance(z: PointLike, w: PointLike) -> float:
    """ω(z, w) = artanh|γ_w(z)|。"""
    p = pseudo_distance(z, w)
    if p >= 1.0:
        return math.inf
    return math.atanh(p)


def conditioning(z: PointLike) -> float:
    """1/(1-|z|²)：所有 Julia 型泛函在边界附近的放大因子。"""
    zv = as_complex(z)
    den = 1.0 - abs(zv) ** 2
    return math.inf if den <= 0 else 1.0 / den


# ---------------------------------------------------------------------------
# 极限圆与 Stolz 区域
# ---------------------------------------------------------------------------
def horocycle_functional(sigma: PointLike, z: PointLike) -> float:
    """|σ-z|²/(1-|z|²)；z ∈ E(σ,R) 当且仅当该值 < R。"""
    sv, zv = as_complex(sigma), as_complex(z)
    den = 1.0 - abs(zv) ** 2
    if den <= 0:
        raise EngineError(INVALID_POINT, f"极限圆泛函要求 z 位于圆盘内: {zv}")
    return abs(sv - zv) ** 2 / den


def horocycle_euclidean(h: Horocycle) -> tuple[complex, float]:
    """极限圆对应的欧氏圆盘 (圆心 σ/(R+1), 半径 R/(R+1))。"""
    radius = h.euclidean_radius
    return h.center.value * (1.0 - radius), radius


def horocycle_contains(h: Horocycle, z: PointLike) -> bool:
    return h.contains(z)


def stolz_ratio(tau: PointLike, z: PointLike) -> float:
    zv = as_complex(z)
    return abs(as_complex(tau) - zv) / (1.0 - abs(zv))


def stolz_contains(k: StolzRegion, z: PointLike) -> bool:
    """|τ-z|/(1-|z|) < M。"""
    return stolz_ratio(k.vertex, z) < k.amplitude


def mobius_disk_image(center: complex, radius: float, a: PointLike) -> tuple[complex, float]:
    """欧氏圆盘 |z - C| < ρ 在 φ_a 下的像 (圆心, 半径)。

    圆盘须落在单位圆盘内。像的圆心是 φ_a 在极点 1/ā 关于原圆的反射点处的值。
    """
    av = as_complex(a)
    reflected = center + radius**2 * av / (1.0 - av * center.conjugate())
    image_center = phi(av, reflected)
    image_radius = abs(phi(av, center + radius) - image_center)
    return image_center, image_radius


# ---------------------------------------------------------------------------
# 采样
# ---------------------------------------------------------------------------
def sample_disk(rng: np.random.Generator, n: int, radius: float = 0.9) -> np.ndarray:
    """半径 radius 的圆盘内按面积测度均匀采样 n 个点。"""
    r = radius * np.sqrt(rng.uniform(0.0, 1.0, n))
    t = rng.uniform(0.0, 2.0 * np.pi, n)
    return r * np.exp(1j * t)


def sample_circle(rng: np.random.Generator, n: int) -> np.ndarray:
    """单位圆周上均匀采样 n 个点。"""
    return np.exp(1j * rng.uniform(0.0, 2.0 * np.pi, n))
