"""hyperjulia 测试配置"""

from __future__ import annotations

from collections.abc import Callable, Iterator

import numpy as np
import pytest

from hyperjulia.config import Config
from hyperjulia.geometry.disk import sample_disk
from hyperjulia.hdq.selfmap import SelfMap
from hyperjulia.rational.blaschke import BlaschkeProduct


@pytest.fixture(autouse=True)
def reset_config() -> Iterator[None]:
    """每个用例使用全新的 Config 单例，避免容差覆盖串扰。"""
    Config.reset()
    yield
    Config.reset()


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20240601)


@pytest.fixture
def random_blaschke(rng: np.random.Generator) -> Callable[[int], BlaschkeProduct]:
    """按次数生成随机 Blaschke 乘积，零点在半径 0.9 的圆盘内。"""

    def make(degree: int) -> BlaschkeProduct:
        theta = float(rng.uniform(0.0, 2.0 * np.pi))
        return BlaschkeProduct(theta, tuple(complex(a) for a in sample_disk(rng, degree)))

    return make


@pytest.fixture
def z2() -> SelfMap:
    return SelfMap.from_blaschke(BlaschkeProduct.monomial(2), "z^2")


@pytest.fixture
def z3() -> SelfMap:
    return SelfMap.from_blaschke(BlaschkeProduct.monomial(3), "z^3")


@pytest.fixture
def gamma_half() -> SelfMap:
    """γ_{1/2}：σ = 1 处 β = 3。"""
    return SelfMap.from_blaschke(BlaschkeProduct.automorphism(0.0, 0.5), "gamma_0.5")


@pytest.fixture
def cp_witness() -> SelfMap:
    """z(z+½)/(1+½z)：β(1) = 4/3，Cowen–Pommerenke 和式取等 3。"""
    return SelfMap.from_blaschke(BlaschkeProduct(0.0, (0j, -0.5 + 0j)), "cp-witness")


@pytest.fixture
def cp_multiple_witness() -> SelfMap:
    """z²(z+½)/(1+½z)：β(1) = 7/3，二重不动点形式取等 3。"""
    return SelfMap.from_blaschke(BlaschkeProduct(0.0, (0j, 0j, -0.5 + 0j)), "cpgen-witness")
