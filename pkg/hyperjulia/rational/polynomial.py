"""多项式与有理映射 — 升幂系数表示，综合除法、反转与 Taylor 平移。"""

from __future__ import annotations

import math
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from typing import overload

import numpy as np
from numpy.polynomial import polynomial as npoly

from hyperjulia.errors import POLE_ERROR, EngineError

# 尾部系数相对最大系数低于该阈值时裁剪
_TRIM_TOL = 1e-14


def _trim(coefficients: Iterable[complex]) -> tuple[complex, ...]:
    coeffs = [complex(c) for c in coefficients]
    if not coeffs:
        return ()
    top = max(abs(c) for c in coeffs)
    if top == 0.0:
        return ()
    while coeffs and abs(coeffs[-1]) <= _TRIM_TOL * top:
        coeffs.pop()
    return tuple(coeffs)


@dataclass(frozen=True)
class Polynomial:
    """升幂排列的复系数多项式，尾部零系数已裁剪；零多项式系数为空。"""

    coefficients: tuple[complex, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "coefficients", _trim(self.coefficients))

    # ------------------------------------------------------------------
    # 构造
    # ------------------------------------------------------------------
    @classmethod
    def constant(cls, c: complex) -> Polynomial:
        return cls((complex(c),))

    @classmethod
    def monomial(cls, k: int, c: complex = 1.0) -> Polynomial:
        return cls((0j,) * k + (complex(c),))

    @classmethod
    def from_roots(cls, roots: Sequence[complex], leading: complex = 1.0) -> Polynomial:
        if len(roots) == 0:
            return cls.constant(leading)
        coeffs = npoly.polyfromroots(np.asarray(roots, dtype=complex)) * leading
        return cls(tuple(coeffs))

    # ------------------------------------------------------------------
    # 基本属性
    # ------------------------------------------------------------------
    @property
    def degree(self) -> int:
        """零多项式次数记为 -1。"""
        return len(self.coefficients) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coefficients

    @property
    def leading(self) -> complex:
        return self.coefficients[-1] if self.coefficients else 0j

    def as_array(self) -> np.ndarray:
        return np.asarray(self.coefficients if self.coefficients else (0j,), dtype=complex)

    @overload
    def __call__(self, z: complex) -> complex: ...
    @overload
    def __call__(self, z: np.ndarray) -> np.ndarray: ...
    def __call__(self, z):
        value = npoly.polyval(z, self.as_array())
        if isinstance(z, np.ndarray):
            return value
        return complex(value)

    # ------------------------------------------------------------------
    # 算术
    # ------------------------------------------------------------------
    def __add__(self, other: Polynomial | complex) -> Polynomial:
        other_p = other if isinstance(other, Polynomial) else Polynomial.constant(other)
        return Polynomial(tuple(npoly.polyadd(self.as_array(), other_p.as_array())))

    def __radd__(self, other: complex) -> Polynomial:
        return self + other

    def __neg__(self) -> Polynomial:
        return Polynomial(tuple(-c for c in self.coefficients))

    def __sub__(self, other: Polynomial | complex) -> Polynomial:
        other_p = other if isinstance(other, Polynomial) else Polynomial.constant(other)
        return self + (-other_p)

    def __mul__(self, other: Polynomial | complex) -> Polynomial:
        if isinstance(other, Polynomial):
            if self.is_zero or other.is_zero:
                return Polynomial(())
            return Polynomial(tuple(npoly.polymul(self.as_array(), other.as_array())))
        return Polynomial(tuple(c * complex(other) for c in self.coefficients))

    def __rmul__(self, other: complex) -> Polynomial:
        return self * other

    def derivative(self) -> Polynomial:
        if self.degree < 1:
            return Polynomial(())
        return Polynomial(tuple(npoly.polyder(self.as_array())))

    def synthetic_division(self, root: complex) -> tuple[Polynomial, complex]:
        """除以 (z - root)，返回 (商, 余数)。余数即在 root 处的值。"""
        coeffs = self.coefficients
        if len(coeffs) <= 1:
            return Polynomial(()), coeffs[0] if coeffs else 0j
        quotient = [0j] * (len(coeffs) - 1)
        acc = coeffs[-1]
        for i in range(len(coeffs) - 2, -1, -1):
            quotient[i] = acc
            acc = coeffs[i] + acc * root
        return Polynomial(tuple(quotient)), acc

    def reversed(self, n: int) -> Polynomial:
        """z^n·p(1/z)，n 为名义次数 (>= 实际次数)。"""
        padded = list(self.coefficients) + [0j] * (n + 1 - len(self.coefficients))
        return Polynomial(tuple(reversed(padded)))

    def taylor_shift(self, z0: complex) -> Polynomial:
        """p(z0 + t) 关于 t 的系数 (重复综合除法)。"""
        remaining = self
        shifted: list[complex] = []
        for _ in range(len(self.coefficients)):
            remaining, r = remaining.synthetic_division(z0)
            shifted.append(r)
        return Polynomial(tuple(shifted))


@dataclass(frozen=True)
class RationalMap:
    """P/Q，分母非零多项式。"""

    numerator: Polynomial
    denominator: Polynomial

    def __post_init__(self) -> None:
        if self.denominator.is_zero:
            raise EngineError(POLE_ERROR, "有理映射的分母不能为零多项式")

    @property
    def degree(self) -> int:
        return max(self.numerator.degree, self.denominator.degree, 0)

    def normalized(self) -> RationalMap:
        """以分母常数项 (或首个非零系数) 归一。"""
        pivot = next((c for c in self.denominator.coefficients if c != 0), 1.0)
        return RationalMap(self.numerator * (1.0 / pivot), self.denominator * (1.0 / pivot))

    @overload
    def __call__(self, z: complex) -> complex: ...
    @overload
    def __call__(self, z: np.ndarray) -> np.ndarray: ...
    def __call__(self, z):
        den = self.denominator(z)
        if np.any(np.abs(den) < 1e-300):
            raise EngineError(POLE_ERROR, f"有理映射在 {z} 处遇到极点")
        return self.numerator(z) / den

    def derivative(self, z: complex) -> complex:
        p, q = self.numerator, self.denominator
        qz = q(z)
        if abs(qz) < 1e-300:
            raise EngineError(POLE_ERROR, f"有理映射在 {z} 处遇到极点")
        return (p.derivative()(z) * qz - p(z) * q.derivative()(z)) / (qz * qz)

    def taylor(self, z0: complex, m: int) -> list[complex]:
        """z0 处的 Taylor 系数 c_0..c_m (幂级数除法)。"""
        p = list(self.numerator.taylor_shift(z0).coefficients)
        q = list(self.denominator.taylor_shift(z0).coefficients)
        p += [0j] * (m + 1 - len(p))
        q += [0j] * (m + 1 - len(q))
        if abs(q[0]) < 1e-300:
            raise EngineError(POLE_ERROR, f"有理映射在 {z0} 处遇到极点")
        c: list[complex] = []
        for n in range(m + 1):
            acc = p[n] - sum(q[i] * c[n - i] for i in range(1, n + 1))
            c.append(acc / q[0])
        return c

    def derivatives(self, z0: complex, m: int) -> list[complex]:
        """f(z0), f'(z0), ..., f^{(m)}(z0)。"""
        return [c * math.factorial(n) for n, c in enumerate(self.taylor(z0, m))]

    def common_roots(self, tol: float = 1e-10) -> list[complex]:
        """分子分母在容差内的公共根。"""
        from hyperjulia.rational.roots import polynomial_roots

        if self.numerator.degree < 1 or self.denominator.degree < 1:
            return []
        den_roots = polynomial_roots(self.denominator)
        return [
            complex(r)
            for r in polynomial_roots(self.numerator)
            if np.min(np.abs(den_roots - r)) <= tol * max(1.0, abs(r))
        ]
