"""映射构造 (factory) 与内置映射注册表单元测试"""

import numpy as np
import pytest

from hyperjulia.boundary.dilation import beta_exact, beta_radial
from hyperjulia.core.builtins import BUILTIN_REGISTRY, build_builtin, builtin_names
from hyperjulia.core.factory import RANDOM_ZERO_RADIUS, build_map, random_blaschke_specs
from hyperjulia.core.models import (
    AutomorphismSpec,
    BlaschkeSpec,
    BuiltinSpec,
    ConjugatedSpec,
    MonomialSpec,
    ProductSpec,
)
from hyperjulia.errors import SPEC_VALIDATION_ERROR, EngineError
from hyperjulia.geometry.disk import automorphism, inverse_automorphism, sample_disk
from hyperjulia.hdq.selfmap import MapKind


def test_builtin_names():
    assert builtin_names() == sorted(BUILTIN_REGISTRY)
    for name in ("cayley-avg", "power-avg", "cubic-avg", "constant", "exp-shift"):
        assert name in BUILTIN_REGISTRY


def test_cayley_avg():
    """(1 + z)/2 固定 1，β(1) = 1/2"""
    f = build_builtin("cayley-avg")
    assert f(1.0) == pytest.approx(1.0)
    assert f(0.0) == pytest.approx(0.5)
    assert beta_exact(f, 1.0).beta == pytest.approx(0.5)
    assert f.blaschke_degree is None


def test_power_avg_defaults():
    """(1 - c)z + c·z^k，默认 k = 2、c = 1/2：β(1) = 3/2"""
    f = build_builtin("power-avg")
    assert f(0.0) == 0
    assert f(0.5) == pytest.approx(0.25 + 0.125)
    assert beta_exact(f, 1.0).beta == pytest.approx(1.5)
    g = build_builtin("power-avg", {"k": 4, "c": 0.25})
    assert beta_exact(g, 1.0).beta == pytest.approx(0.75 + 1.0)


def test_cubic_avg_fixes_both_ends():
    f = build_builtin("cubic-avg", {"c": 0.5})
    assert f(1.0) == pytest.approx(1.0)
    assert f(-1.0) == pytest.approx(-1.0)
    assert beta_exact(f, -1.0).beta == pytest.approx(2.0)


def test_constant_map():
    f = build_builtin("constant", {"re": 0.25, "im": -0.5})
    assert f(0.9j) == pytest.approx(0.25 - 0.5j)
    with pytest.raises(EngineError):
        build_builtin("constant", {"re": 1.0})


def test_exp_shift_is_black_box():
    """exp(c(z - 1))：黑盒，σ = 1 处 β = c"""
    f = build_builtin("exp-shift", {"c": 2.0})
    assert f.kind == MapKind.BLACK_BOX
    assert f.derivative(0.2) == pytest.approx(2.0 * np.exp(2.0 * (0.2 - 1.0)))
    assert beta_radial(f, 1.0).beta == pytest.approx(2.0, rel=1e-6)


@pytest.mark.parametrize(
    ("name", "params"),
    [
        ("no-such-map", {}),
        ("cayley-avg", {"c": 0.5}),
        ("power-avg", {"k": 2.5}),
        ("power-avg", {"k": 0}),
        ("cubic-avg", {"c": 1.5}),
        ("exp-shift", {"c": 0.0}),
    ],
)
def test_builtin_invalid(name: str, params: dict):
    with pytest.raises(EngineError) as exc_info:
        build_builtin(name, params)
    assert exc_info.value.code == SPEC_VALIDATION_ERROR


def test_build_blaschke_and_monomial():
    f = build_map(BlaschkeSpec(name="b", theta=0.3, zeros=[(0.5, 0.0), (0.0, -0.2)]))
    assert f.kind == MapKind.BLASCHKE
    assert f.blaschke_degree == 2
    m = build_map(MonomialSpec(k=3, theta=np.pi))
    assert m.name == "monomial[k=3]"
    assert m(0.5) == pytest.approx(-0.125)


def test_product_of_blaschke_stays_exact():
    f = build_map(ProductSpec(factors=[MonomialSpec(k=2), BlaschkeSpec(zeros=[(0.3, 0.1)])]))
    assert f.kind == MapKind.BLASCHKE
    assert f.blaschke_degree == 3


def test_product_with_rational_and_black_box():
    """含有理因子时为有理映射，含黑盒因子时为黑盒，导数按乘积法则"""
    rational = build_map(ProductSpec(factors=[MonomialSpec(k=1), BuiltinSpec(name="cayley-avg")]))
    assert rational.kind == MapKind.RATIONAL
    assert rational(0.5) == pytest.approx(0.5 * 0.75)

    mixed = build_map(
        ProductSpec(factors=[MonomialSpec(k=2), BuiltinSpec(name="exp-shift", params={"c": 1})])
    )
    assert mixed.kind == MapKind.BLACK_BOX
    z = 0.3 - 0.2j
    expected = 2 * z * np.exp(z - 1) + z**2 * np.exp(z - 1)
    assert mixed.derivative(z) == pytest.approx(expected)


def _conjugate(spec, theta: float, a: complex) -> ConjugatedSpec:
    return ConjugatedSpec(
        inner=spec, automorphism=AutomorphismSpec(theta=theta, a=(a.real, a.imag))
    )


@pytest.mark.parametrize(
    "inner",
    [MonomialSpec(k=2), BuiltinSpec(name="power-avg", params={"k": 3, "c": 0.5})],
)
def test_conjugated_moves_fixed_point(inner, rng):
    """φ^{-1}∘inner∘φ：原点处的不动点移到 a，逐点与复合一致"""
    theta, a = 0.7, 0.3 - 0.2j
    g = build_map(_conjugate(inner, theta, a))
    f = build_map(inner)
    assert g.is_exact
    assert g(a) == pytest.approx(a, abs=1e-12)
    inv_theta, inv_a = inverse_automorphism(theta, a)
    for z in sample_disk(rng, 5):
        z = complex(z)
        expected = automorphism(inv_theta, inv_a, f(automorphism(theta, a, z)))
        assert g(z) == pytest.approx(expected, abs=1e-9)


def test_conjugated_blaschke_keeps_degree():
    g = build_map(_conjugate(MonomialSpec(k=3), 0.0, 0.4j))
    assert g.kind == MapKind.BLASCHKE
    assert g.blaschke_degree == 3


def test_conjugated_black_box_derivative():
    g = build_map(_conjugate(BuiltinSpec(name="exp-shift"), 1.2, -0.3 + 0.1j))
    assert g.kind == MapKind.BLACK_BOX
    z, h = 0.2 + 0.1j, 1e-6
    numeric = (g(z + h) - g(z - h)) / (2 * h)
    assert g.derivative(z) == pytest.approx(numeric, abs=1e-6)


def test_random_specs_are_deterministic():
    """同一 seed 生成相同规格；零点落在半径 0.9 内"""
    first = random_blaschke_specs(7, 3, 4)
    second = random_blaschke_specs(7, 3, 4)
    assert first == second
    assert [s.name for s in first] == [f"random[seed=7, {i}]" for i in range(4)]
    for s in first:
        assert len(s.zeros) == 3
        assert 0.0 <= s.theta < 2 * np.pi
        assert all(np.hypot(*a) <= RANDOM_ZERO_RADIUS for a in s.zeros)
    assert random_blaschke_specs(8, 3, 4) != first
    assert random_blaschke_specs(7, 3, 0) == []


def test_random_specs_invalid_degree():
    with pytest.raises(EngineError) as exc_info:
        random_blaschke_specs(0, 0, 1)
    assert exc_info.value.code == SPEC_VALIDATION_ERROR
