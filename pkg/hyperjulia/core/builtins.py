"""内置映射注册表 — builtin 规格按名称查找构造函数。"""

from __future__ import annotations

import cmath
import threading
from collections.abc import Callable, Mapping

from hyperjulia.errors import SPEC_VALIDATION_ERROR, EngineError
from hyperjulia.hdq.selfmap import SelfMap
from hyperjulia.rational.polynomial import Polynomial, RationalMap

type BuiltinFactory = Callable[[Mapping[str, float]], SelfMap]

# 内置映射注册表：name -> (构造函数, 允许的参数名)
BUILTIN_REGISTRY: dict[str, tuple[BuiltinFactory, frozenset[str]]] = {}

# 线程锁，保护注册表的并发访问
_REGISTRY_LOCK = threading.RLock()


def register_builtin(
    name: str, params: tuple[str, ...] = ()
) -> Callable[[BuiltinFactory], BuiltinFactory]:
    """以 name 注册内置映射构造函数（线程安全）。"""

    def decorator(factory: BuiltinFactory) -> BuiltinFactory:
        with _REGISTRY_LOCK:
            BUILTIN_REGISTRY[name] = (factory, frozenset(params))
        return factory

    return decorator


def builtin_names() -> list[str]:
    with _REGISTRY_LOCK:
        return sorted(BUILTIN_REGISTRY)


def build_builtin(name: str, params: Mapping[str, float] | None = None) -> SelfMap:
    """
    构造内置映射。
    - 名称未注册 → SPEC_VALIDATION_ERROR
    - 出现未声明的参数 → SPEC_VALIDATION_ERROR
    """
    params = dict(params or {})
    with _REGISTRY_LOCK:
        entry = BUILTIN_REGISTRY.get(name)
    if entry is None:
        raise EngineError(
            SPEC_VALIDATION_ERROR,
            f"未知的内置映射: {name}",
            detail=f"可选: {', '.join(builtin_names())}",
        )
    factory, allowed = entry
    unknown = sorted(set(params) - allowed)
    if unknown:
        raise EngineError(
            SPEC_VALIDATION_ERROR,
            f"内置映射 {name} 不接受参数: {', '.join(unknown)}",
            detail=f"允许的参数: {', '.join(sorted(allowed)) or '无'}",
        )
    return factory(params)


def _weight(params: Mapping[str, float], key: str = "c", default: float = 0.5) -> float:
    c = float(params.get(key, default))
    if not 0.0 <= c <= 1.0:
        raise EngineError(SPEC_VALIDATION_ERROR, f"params.{key} 必须位于 [0, 1]，实际 {c}")
    return c


def _power_avg(k: int, c: float, name: str) -> SelfMap:
    coefficients = [0j] * (max(k, 1) + 1)
    coefficients[1] += 1.0 - c
    coefficients[k] += c
    R = RationalMap(Polynomial(tuple(coefficients)), Polynomial.constant(1.0))
    return SelfMap.from_rational(R, name)


@register_builtin("cayley-avg")
def cayley_avg(params: Mapping[str, float]) -> SelfMap:
    """(1 + z)/2：边界不动点 1 处 β = 1/2。"""
    R = RationalMap(Polynomial((0.5, 0.5)), Polynomial.constant(1.0))
    return SelfMap.from_rational(R, "cayley-avg")


@register_builtin("power-avg", ("k", "c"))
def power_avg(params: Mapping[str, float]) -> SelfMap:
    """(1 - c)z + c·z^k，固定 0 与 1。"""
    k = int(params.get("k", 2))
    if k < 1 or k != params.get("k", 2):
        raise EngineError(SPEC_VALIDATION_ERROR, f"params.k 必须为正整数，实际 {params.get('k')}")
    return _power_avg(k, _weight(params), f"power-avg[k={k}]")


@register_builtin("cubic-avg", ("c",))
def cubic_avg(params: Mapping[str, float]) -> SelfMap:
    """(1 - c)z + c·z³，固定 0 与 ±1。"""
    return _power_avg(3, _weight(params), "cubic-avg")


@register_builtin("constant", ("re", "im"))
def constant(params: Mapping[str, float]) -> SelfMap:
    value = complex(params.get("re", 0.0), params.get("im", 0.0))
    if not abs(value) < 1.0:
        raise EngineError(SPEC_VALIDATION_ERROR, f"常值映射须位于圆盘内，实际 |c| = {abs(value)}")
    R = RationalMap(Polynomial.constant(value), Polynomial.constant(1.0))
    return SelfMap.from_rational(R, f"constant[{value}]")


@register_builtin("exp-shift", ("c",))
def exp_shift(params: Mapping[str, float]) -> SelfMap:
    """exp(c(z - 1))，c > 0：黑盒映射，边界不动点 1 处 β = c。"""
    c = float(params.get("c", 1.0))
    if not c > 0:
        raise EngineError(SPEC_VALIDATION_ERROR, f"params.c 必须为正，实际 {c}")

    def func(z: complex) -> complex:
        return cmath.exp(c * (z - 1.0))

    def derivative(z: complex) -> complex:
        return c * cmath.exp(c * (z - 1.0))

    return SelfMap.black_box(func, derivative=derivative, name=f"exp-shift[c={c}]")
