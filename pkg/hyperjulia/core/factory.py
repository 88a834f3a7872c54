"""MapSpec → SelfMap：按 type 分派，精确形式尽量保持精确。"""

from __future__ import annotations

import cmath
import logging
import math

import numpy as np

from hyperjulia.core.builtins import build_builtin
from hyperjulia.core.models import (
    AutomorphismSpec,
    BlaschkeSpec,
    BuiltinSpec,
    ConjugatedSpec,
    MapSpec,
    MonomialSpec,
    Pair,
    ProductSpec,
)
from hyperjulia.errors import SPEC_VALIDATION_ERROR, EngineError
from hyperjulia.geometry.disk import automorphism, inverse_automorphism, sample_disk
from hyperjulia.hdq.selfmap import SelfMap
from hyperjulia.rational.blaschke import BlaschkeProduct, blaschke_conjugate
from hyperjulia.rational.polynomial import Polynomial, RationalMap

logger = logging.getLogger("hyperjulia")


def _complex(p: Pair) -> complex:
    return complex(p[0], p[1])


def build_map(spec: MapSpec) -> SelfMap:
    """按规格构造 SelfMap；构造检查 (零点范围、自映射抽检) 失败时抛 EngineError。"""
    match spec:
        case BlaschkeSpec():
            B = BlaschkeProduct(spec.theta, tuple(_complex(a) for a in spec.zeros))
            return SelfMap.from_blaschke(B, spec.name)
        case MonomialSpec():
            B = BlaschkeProduct.monomial(spec.k, spec.theta)
            return SelfMap.from_blaschke(B, spec.name or f"monomial[k={spec.k}]")
        case ProductSpec():
            return _product([build_map(s) for s in spec.factors], spec.name)
        case ConjugatedSpec():
            return _conjugated(build_map(spec.inner), spec.automorphism, spec.name)
        case BuiltinSpec():
            return build_builtin(spec.name, spec.params)
    raise TypeError(f"未知的规格类型: {type(spec).__name__}")


def build_maps(specs: list[MapSpec]) -> list[SelfMap]:
    return [build_map(s) for s in specs]


# ---------------------------------------------------------------------------
# product
# ---------------------------------------------------------------------------
def _product(factors: list[SelfMap], name: str) -> SelfMap:
    if all(f.blaschke is not None for f in factors):
        B = factors[0].blaschke
        assert B is not None
        for f in factors[1:]:
            assert f.blaschke is not None
            B = B * f.blaschke
        return SelfMap.from_blaschke(B, name or f"product[d={B.degree}]")
    label = name or "product[" + ",".join(f.name for f in factors) + "]"
    if all(f.rational is not None for f in factors):
        numerator, denominator = Polynomial.constant(1.0), Polynomial.constant(1.0)
        for f in factors:
            assert f.rational is not None
            numerator = numerator * f.rational.numerator
            denominator = denominator * f.rational.denominator
        return SelfMap.from_rational(RationalMap(numerator, denominator).normalized(), label)

    def func(z: complex) -> complex:
        return math.prod((f(z) for f in factors), start=1 + 0j)

    def derivative(z: complex) -> complex:
        values = [f(z) for f in factors]
        total = 0j
        for j, f in enumerate(factors):
            others = math.prod((v for i, v in enumerate(values) if i != j), start=1 + 0j)
            total += f.derivative(z) * others
        return total

    return SelfMap.black_box(func, derivative=derivative, name=label)


# ---------------------------------------------------------------------------
# conjugated
# ---------------------------------------------------------------------------
def _mobius(theta: float, a: complex) -> tuple[complex, complex, complex, complex]:
    """e^{iθ}γ_a(z) = (αz + β)/(γz + δ) 的系数。"""
    phase = cmath.exp(1j * theta)
    return phase, -phase * a, -a.conjugate(), 1.0 + 0j


def _automorphism_derivative(theta: float, a: complex, z: complex) -> complex:
    return cmath.exp(1j * theta) * (1.0 - abs(a) ** 2) / (1.0 - a.conjugate() * z) ** 2


def _compose_rational(R: RationalMap, theta: float, a: complex) -> RationalMap:
    """R∘φ，φ = e^{iθ}γ_a：分子分母同乘 (γz + δ)^n 化为多项式。"""
    alpha, beta, gam, delta = _mobius(theta, a)
    top, bottom = Polynomial((beta, alpha)), Polynomial((delta, gam))
    n = max(R.numerator.degree, R.denominator.degree, 0)

    def homogenize(p: Polynomial) -> Polynomial:
        total = Polynomial(())
        for j, c in enumerate(p.coefficients):
            term = Polynomial.constant(c)
            for _ in range(j):
                term = term * top
            for _ in range(n - j):
                term = term * bottom
            total = total + term
        return total

    return RationalMap(homogenize(R.numerator), homogenize(R.denominator))


def _post_mobius(R: RationalMap, theta: float, a: complex) -> RationalMap:
    """φ∘R = (αP + βQ)/(γP + δQ)。"""
    alpha, beta, gam, delta = _mobius(theta, a)
    P, Q = R.numerator, R.denominator
    return RationalMap(P * alpha + Q * beta, P * gam + Q * delta)


def _conjugated(inner: SelfMap, auto: AutomorphismSpec, name: str) -> SelfMap:
    """φ^{-1}∘inner∘φ；inner 在 0 的不动点移到 a。"""
    theta, a = auto.theta, _complex(auto.a)
    inv_theta, inv_a = inverse_automorphism(theta, a)
    label = name or f"conjugated[{inner.name}, a={a}]"

    if inner.blaschke is not None:
        B = blaschke_conjugate(inner.blaschke, pre=(theta, a), post=(inv_theta, inv_a))
        return SelfMap.from_blaschke(B, label)
    if inner.rational is not None:
        R = _post_mobius(_compose_rational(inner.rational, theta, a), inv_theta, inv_a)
        return SelfMap.from_rational(R.normalized(), label)

    def func(z: complex) -> complex:
        return automorphism(inv_theta, inv_a, inner(automorphism(theta, a, z)))

    def derivative(z: complex) -> complex:
        u = automorphism(theta, a, z)
        v = inner(u)
        return (
            _automorphism_derivative(inv_theta, inv_a, v)
            * inner.derivative(u)
            * _automorphism_derivative(theta, a, z)
        )

    logger.debug(f"黑盒映射 {inner.name} 按自同构共轭，a = {a}")
    return SelfMap.black_box(
        func,
        derivative=derivative,
        name=label,
        blaschke_degree=inner.blaschke_degree,
    )


# ---------------------------------------------------------------------------
# random
# ---------------------------------------------------------------------------
RANDOM_ZERO_RADIUS = 0.9


def random_blaschke_specs(seed: int, degree: int, count: int) -> list[BlaschkeSpec]:
    """
    生成 count 个 d 次 Blaschke 乘积规格：
    θ 在 [0, 2π) 上均匀，零点在半径 0.9 的圆盘内按面积均匀。同一 seed 结果相同。
    """
    if degree < 1:
        raise EngineError(SPEC_VALIDATION_ERROR, f"degree 必须 >= 1，实际 {degree}")
    if count < 0:
        raise EngineError(SPEC_VALIDATION_ERROR, f"count 不能为负，实际 {count}")
    rng = np.random.default_rng(seed)
    specs = []
    for i in range(count):
        theta = float(rng.uniform(0.0, 2.0 * math.pi))
        zeros = sample_disk(rng, degree, RANDOM_ZERO_RADIUS)
        specs.append(
            BlaschkeSpec(
                name=f"random[seed={seed}, {i}]",
                theta=theta,
                zeros=[(float(a.real), float(a.imag)) for a in zeros],
            )
        )
    logger.info(f"生成 {count} 个 {degree} 次随机 Blaschke 乘积 (seed {seed})")
    return specs
