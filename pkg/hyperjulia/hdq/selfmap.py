"""统一的圆盘自映射句柄 — 精确有理形式 (Blaschke / 有理) 或黑盒求值器。"""

from __future__ import annotations

import logging
import math
from collections.abc import Callable, Mapping
from dataclasses import dataclass, field
from enum import StrEnum
from typing import overload

import numpy as np

from hyperjulia.config import Config
from hyperjulia.errors import INVALID_POINT, NOT_SELF_MAP, EngineError
from hyperjulia.geometry.disk import PointLike, as_complex, sample_disk
from hyperjulia.hdq.differentiation import (
    RealComponent,
    central_difference,
    complex_step_derivative,
    contour_taylor,
)
from hyperjulia.rational.blaschke import BlaschkeProduct
from hyperjulia.rational.polynomial import RationalMap
from hyperjulia.rational.roots import count_inside, polynomial_roots

logger = logging.getLogger("hyperjulia")

# 抽检点固定种子，保证构造检查可复现
_SPOT_CHECK_SEED = 20240601
_UNIMODULAR_SAMPLES = 64


class MapKind(StrEnum):
    BLASCHKE = "blaschke"
    RATIONAL = "rational"
    BLACK_BOX = "black_box"


@dataclass(frozen=True)
class TaylorData:
    """z0 处的导数列 f(z0), f'(z0), ..., f^{(m)}(z0)，m >= 1。"""

    point: complex
    coefficients: tuple[complex, ...]

    def __post_init__(self) -> None:
        if len(self.coefficients) < 2:
            raise EngineError(INVALID_POINT, "TaylorData 至少需要 f 与 f' 两项")
        object.__setattr__(self, "point", complex(self.point))
        object.__setattr__(self, "coefficients", tuple(complex(c) for c in self.coefficients))

    @property
    def m(self) -> int:
        return len(self.coefficients) - 1

    def taylor_coefficient(self, n: int) -> complex:
        """f^{(n)}(z0)/n!"""
        return self.coefficients[n] / math.factorial(n)


@dataclass(frozen=True, eq=False)
class SelfMap:
    """
    全纯自映射 f: 𝔻 → 𝔻̄。
    - BLASCHKE: 因式形式 Blaschke 乘积，精确求值与求导
    - RATIONAL: 有理映射 P/Q；若边界单模则 blaschke_degree 记录其次数
    - BLACK_BOX: 求值闭包，可附导数闭包或实解析分量 (u, v)
    """

    kind: MapKind
    name: str = ""
    blaschke: BlaschkeProduct | None = None
    rational: RationalMap | None = None
    blaschke_degree: int | None = None
    evaluator: Callable[[complex], complex] | None = None
    derivative_fn: Callable[[complex], complex] | None = None
    components: tuple[RealComponent, RealComponent] | None = None
    taylor_hints: Mapping[complex, TaylorData] = field(default_factory=dict)

    # ------------------------------------------------------------------
    # 构造
    # ------------------------------------------------------------------
    @classmethod
    def from_blaschke(cls, B: BlaschkeProduct, name: str = "") -> SelfMap:
        return cls(
            kind=MapKind.BLASCHKE,
            name=name or f"blaschke[d={B.degree}]",
            blaschke=B,
            rational=B.to_rational(),
            blaschke_degree=B.degree,
        )

    @classmethod
    def from_rational(
        cls,
        R: RationalMap,
        name: str = "",
        *,
        blaschke_degree: int | None = None,
        check: bool = True,
        samples: int | None = None,
    ) -> SelfMap:
        """有理映射；未给出 blaschke_degree 时按边界单模性自动识别。"""
        if blaschke_degree is None and check:
            blaschke_degree = _detect_blaschke_degree(R)
        f = cls(
            kind=MapKind.RATIONAL,
            name=name or f"rational[{R.numerator.degree}/{R.denominator.degree}]",
            rational=R,
            blaschke_degree=blaschke_degree,
        )
        if check:
            f.spot_check(samples)
        return f

    @classmethod
    def black_box(
        cls,
        func: Callable[[complex], complex] | None = None,
        *,
        derivative: Callable[[complex], complex] | None = None,
        components: tuple[RealComponent, RealComponent] | None = None,
        name: str = "black-box",
        blaschke_degree: int | None = None,
        taylor_hints: Mapping[complex, TaylorData] | None = None,
        check: bool = True,
        samples: int | None = None,
    ) -> SelfMap:
        """黑盒映射：至少提供 func 或 components 之一。"""
        if func is None:
            if components is None:
                raise EngineError(INVALID_POINT, "黑盒映射需要求值闭包或实解析分量")
            u, v = components

            def func(z: complex) -> complex:
                return complex(u(z.real, z.imag).real, v(z.real, z.imag).real)

        f = cls(
            kind=MapKind.BLACK_BOX,
            name=name,
            blaschke_degree=blaschke_degree,
            evaluator=func,
            derivative_fn=derivative,
            components=components,
            taylor_hints=dict(taylor_hints or {}),
        )
        if check:
            f.spot_check(samples)
        return f

    # ------------------------------------------------------------------
    # 性质
    # ------------------------------------------------------------------
    @property
    def is_exact(self) -> bool:
        return self.rational is not None

    @property
    def is_automorphism(self) -> bool | None:
        return self.blaschke_degree_is(1)

    def blaschke_degree_is(self, d: int) -> bool | None:
        """f 是否为 d 次 Blaschke 乘积；黑盒且未声明次数时返回 None。"""
        if self.blaschke_degree is not None:
            return self.blaschke_degree == d
        if self.is_exact:
            return False
        return None

    def blaschke_degree_at_most(self, d: int) -> bool | None:
        if self.blaschke_degree is not None:
            return self.blaschke_degree <= d
        if self.is_exact:
            return False
        return None

    def describe(self) -> dict[str, object]:
        return {"name": self.name, "kind": str(self.kind), "blaschke_degree": self.blaschke_degree}

    # ------------------------------------------------------------------
    # 求值与求导
    # ------------------------------------------------------------------
    @overload
    def __call__(self, z: PointLike) -> complex: ...
    @overload
    def __call__(self, z: np.ndarray) -> np.ndarray: ...
    def __call__(self, z):
        if isinstance(z, np.ndarray):
            if self.blaschke is not None:
                return self.blaschke(z)
            if self.rational is not None:
                return self.rational(z)
            assert self.evaluator is not None
            return np.array([self.evaluator(complex(v)) for v in z.ravel()]).reshape(z.shape)
        zv = as_complex(z)
        if self.blaschke is not None:
            return self.blaschke(zv)
        if self.rational is not None:
            return self.rational(zv)
        assert self.evaluator is not None
        return complex(self.evaluator(zv))

    def derivative(self, z: PointLike) -> complex:
        zv = as_complex(z)
        if self.blaschke is not None:
            return self.blaschke.derivative(zv)
        if self.rational is not None:
            return self.rational.derivative(zv)
        if self.derivative_fn is not None:
            return complex(self.derivative_fn(zv))
        if self.components is not None:
            return complex_step_derivative(*self.components, zv)
        return central_difference(self, zv)

    def taylor(self, z0: PointLike, m: int) -> TaylorData:
        """z0 处 m 阶导数列：有理形式用幂级数除法，黑盒用 Cauchy 积分。"""
        zv = as_complex(z0)
        hint = self.taylor_hints.get(zv)
        if hint is not None and hint.m >= m:
            return TaylorData(zv, hint.coefficients[: m + 1])
        if self.rational is not None:
            return TaylorData(zv, tuple(self.rational.derivatives(zv, m)))
        coeffs = contour_taylor(self, zv, m)
        return TaylorData(zv, tuple(c * math.factorial(n) for n, c in enumerate(coeffs)))

    # ------------------------------------------------------------------
    # 构造检查
    # ------------------------------------------------------------------
    def spot_check(self, samples: int | None = None) -> None:
        """在圆盘内固定种子的采样点上检查 |f| <= 1 + SELF_MAP_TOL。"""
        cfg = Config()
        n = cfg.SPOT_CHECK_SAMPLES if samples is None else samples
        if n <= 0:
            return
        points = sample_disk(np.random.default_rng(_SPOT_CHECK_SEED), n, radius=0.999)
        worst = float(np.max(np.abs(self(points))))
        if not worst <= 1.0 + cfg.SELF_MAP_TOL:
            raise EngineError(
                NOT_SELF_MAP,
                f"映射 {self.name} 不是圆盘自映射: 采样最大模长 {worst:.12g}",
            )
        logger.debug(f"映射 {self.name} 抽检通过: {n} 个点, 最大模长 {worst:.6f}")


def _detect_blaschke_degree(R: RationalMap) -> int | None:
    """边界单模则视为 Blaschke 乘积，次数取分子圆盘内零点个数。"""
    sigma = np.exp(2j * np.pi * (np.arange(_UNIMODULAR_SAMPLES) + 0.37) / _UNIMODULAR_SAMPLES)
    try:
        moduli = np.abs(R(sigma))
    except EngineError:
        return None
    if float(np.max(np.abs(moduli - 1.0))) > Config().SELF_MAP_TOL:
        return None
    if R.numerator.degree < 1:
        return 0
    return count_inside(polynomial_roots(R.numerator))
