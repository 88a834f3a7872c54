"""映射规格与套件配置模型 - 描述 JSON/YAML → Python 的数据结构。

本模块只负责结构与不变量校验，不构造 SelfMap；构造见 core.factory。
"""

from __future__ import annotations

import math
from typing import Annotated, Literal, get_args

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

# 复数统一写作 [re, im]
Pair = tuple[float, float]

# 零点与自同构参数须满足 |a| <= 1 - ZERO_MARGIN
_ZERO_LIMIT = 1.0 - 1e-9


def _modulus(p: Pair) -> float:
    return math.hypot(p[0], p[1])


class AutomorphismSpec(BaseModel):
    """automorphism — e^{iθ}γ_a 的参数。"""

    model_config = ConfigDict(extra="forbid")

    theta: float = 0.0
    a: Pair = (0.0, 0.0)

    @field_validator("a")
    @classmethod
    def check_inside(cls, v: Pair) -> Pair:
        if not _modulus(v) <= _ZERO_LIMIT:
            raise ValueError(
                f"automorphism.a 必须满足 |a| <= {_ZERO_LIMIT}，实际 |a| = {_modulus(v)}"
            )
        return v


class BlaschkeSpec(BaseModel):
    """blaschke {theta, zeros}"""

    model_config = ConfigDict(extra="forbid")

    type: Literal["blaschke"] = "blaschke"
    name: str = ""
    theta: float = 0.0
    zeros: list[Pair] = Field(default_factory=list)

    @field_validator("zeros")
    @classmethod
    def check_zeros(cls, v: list[Pair]) -> list[Pair]:
        for i, z in enumerate(v):
            if not _modulus(z) <= _ZERO_LIMIT:
                raise ValueError(
                    f"zeros[{i}] 必须满足 |a| <= {_ZERO_LIMIT}，实际 |a| = {_modulus(z)}"
                )
        return v


class MonomialSpec(BaseModel):
    """monomial {k, theta} — e^{iθ}z^k"""

    model_config = ConfigDict(extra="forbid")

    type: Literal["monomial"] = "monomial"
    name: str = ""
    k: int = Field(ge=1)
    theta: float = 0.0


class ProductSpec(BaseModel):
    """product {factors} — 各因子逐点相乘"""

    model_config = ConfigDict(extra="forbid")

    type: Literal["product"] = "product"
    name: str = ""
    factors: list[MapSpec] = Field(min_length=1)


class ConjugatedSpec(BaseModel):
    """conjugated {inner, automorphism} — φ^{-1}∘inner∘φ，φ = e^{iθ}γ_a，不动点 0 移到 a。"""

    model_config = ConfigDict(extra="forbid")

    type: Literal["conjugated"] = "conjugated"
    name: str = ""
    inner: MapSpec
    automorphism: AutomorphismSpec


class BuiltinSpec(BaseModel):
    """builtin {name, params} — 名称须在 core.builtins 注册表中"""

    model_config = ConfigDict(extra="forbid")

    type: Literal["builtin"] = "builtin"
    name: str
    params: dict[str, float] = Field(default_factory=dict)


MapSpec = Annotated[
    BlaschkeSpec | MonomialSpec | ProductSpec | ConjugatedSpec | BuiltinSpec,
    Field(discriminator="type"),
]


class MapDocument(BaseModel):
    """规格文件顶层：单个 MapSpec 或 MapSpec 列表。"""

    maps: list[MapSpec] = Field(min_length=1)


SuiteName = Literal[
    "julia",
    "two-point",
    "multipoint",
    "mercer",
    "lower-bounds",
    "cowen-pommerenke",
    "cp-multiple",
    "schwarz-pick",
    "origin",
    "all",
]

SUITES: tuple[str, ...] = get_args(SuiteName)


class SuiteConfig(BaseModel):
    """一次 verify 的执行参数；随机输入一律由 seed 决定。"""

    model_config = ConfigDict(extra="forbid")

    suite: SuiteName = "all"
    sigmas: list[Pair] | Literal["auto"] = "auto"
    points: list[Pair] | None = None
    k: int | None = Field(default=None, ge=0)
    z0: Pair = (0.0, 0.0)
    samples: int = Field(default=20, ge=1)
    seed: int = 0
    tol_check: float | None = Field(default=None, gt=0)
    tol_eq: float | None = Field(default=None, gt=0)

    @field_validator("points")
    @classmethod
    def check_points(cls, v: list[Pair] | None) -> list[Pair] | None:
        for i, p in enumerate(v or []):
            if not _modulus(p) < 1.0:
                raise ValueError(f"points[{i}] 必须位于单位圆盘内，实际 |w| = {_modulus(p)}")
        return v

    @field_validator("z0")
    @classmethod
    def check_z0(cls, v: Pair) -> Pair:
        if not _modulus(v) < 1.0:
            raise ValueError(f"z0 必须位于单位圆盘内，实际 |z0| = {_modulus(v)}")
        return v

    @field_validator("sigmas")
    @classmethod
    def check_sigmas(cls, v: list[Pair] | Literal["auto"]) -> list[Pair] | Literal["auto"]:
        if v == "auto":
            return v
        for i, s in enumerate(v):
            if abs(_modulus(s) - 1.0) > 1e-12:
                raise ValueError(f"sigmas[{i}] 必须位于单位圆周上，实际 |σ| = {_modulus(s)}")
        return v


class SweepGrid(BaseModel):
    """sweep 网格：变量、区间与步数；log1m 在 1 - x 上取对数等距。"""

    model_config = ConfigDict(extra="forbid")

    variable: Literal["z", "w", "r", "k"]
    start: float
    stop: float
    steps: int = Field(ge=1)
    spacing: Literal["linear", "log1m"] = "linear"
    # 仅 k 扫描使用：阶梯取简化形式
    simplified: bool = False

    @model_validator(mode="after")
    def check_range(self) -> SweepGrid:
        inside = 0.0 <= self.start < 1.0 and 0.0 <= self.stop < 1.0
        if self.variable in ("z", "w", "r") and not inside:
            raise ValueError(f"{self.variable} 的取值区间必须落在 [0, 1) 内")
        if self.variable == "k" and (self.start < 0 or self.stop < self.start):
            raise ValueError("k 的取值区间必须满足 0 <= start <= stop")
        if self.spacing == "log1m" and self.variable == "k":
            raise ValueError("k 只能使用 linear 间距")
        return self


ProductSpec.model_rebuild()
ConjugatedSpec.model_rebuild()
MapDocument.model_rebuild()
