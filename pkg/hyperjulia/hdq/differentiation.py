"""黑盒映射的数值微分：复步长、Richardson 中心差分、Cauchy 积分 (FFT) Taylor 提取。"""

from __future__ import annotations

from collections.abc import Callable

import numpy as np

type RealComponent = Callable[[complex, float], complex]

COMPLEX_STEP = 1e-20
CENTRAL_STEP = 1e-5
CONTOUR_NODES = 64


def complex_step_derivative(u: RealComponent, v: RealComponent, z: complex) -> complex:
    """f = u + iv 由实解析分量给出时，f'(z) = ∂u/∂x + i∂v/∂x，沿 x 方向取复步长。"""
    x, y = z.real, z.imag
    ux = u(complex(x, COMPLEX_STEP), y).imag / COMPLEX_STEP
    vx = v(complex(x, COMPLEX_STEP), y).imag / COMPLEX_STEP
    return complex(ux, vx)


def central_difference(func: Callable[[complex], complex], z: complex) -> complex:
    """步长 h、h/2 的中心差分再做一次 Richardson 外推；步长不超过到边界距离的 1/4。"""
    h = min(CENTRAL_STEP, (1.0 - abs(z)) / 4.0)

    def diff(step: float) -> complex:
        return (func(z + step) - func(z - step)) / (2.0 * step)

    return (4.0 * diff(h / 2.0) - diff(h)) / 3.0


def contour_taylor(
    func: Callable[[complex], complex],
    z0: complex,
    order: int,
    *,
    radius: float | None = None,
    nodes: int = CONTOUR_NODES,
) -> list[complex]:
    """
    圆周 |z - z0| = r 上的 Cauchy 积分经 FFT 离散，返回 Taylor 系数 c_0..c_order。
    r 默认取到单位圆距离的一半，混叠误差约为 2^{-nodes}。
    """
    r = radius if radius is not None else 0.5 * (1.0 - abs(z0))
    points = z0 + r * np.exp(2j * np.pi * np.arange(nodes) / nodes)
    values = np.array([func(complex(p)) for p in points], dtype=complex)
    coeffs = np.fft.fft(values) / nodes
    return [complex(coeffs[k]) / r**k for k in range(order + 1)]
