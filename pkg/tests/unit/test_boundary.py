"""边界伸缩系数、β 递推与边界不动点单元测试"""

import cmath
import math

import numpy as np
import pytest

from hyperjulia.boundary.chain import beta_chain
from hyperjulia.boundary.dilation import (
    BoundaryDilation,
    DilationMethod,
    beta_exact,
    beta_radial,
    beta_star,
    dilation_for,
    richardson_radial,
)
from hyperjulia.boundary.fixed_points import (
    boundary_fixed_points,
    boundary_solutions,
    fixed_point_condition,
    multiple_fixed_point_sigmas,
)
from hyperjulia.errors import (
    INCONCLUSIVE_LIMIT,
    INCONSISTENT_INPUT,
    INVALID_POINT,
    PRECONDITION_FAILED,
    EngineError,
)
from hyperjulia.geometry.disk import BoundaryPoint, gamma, sample_circle, sample_disk
from hyperjulia.hdq.chain import delta_chain
from hyperjulia.hdq.selfmap import SelfMap
from hyperjulia.rational.blaschke import BlaschkeProduct
from hyperjulia.rational.polynomial import Polynomial, RationalMap

HALF_Z = RationalMap(Polynomial((0.0, 0.5)), Polynomial.constant(1.0))


def _quotient_black_box(B: BlaschkeProduct, w: complex) -> SelfMap:
    """z ↦ γ_{B(w)}(B(z))/γ_w(z) 作为黑盒，不经过精确消根。"""
    fw = B(w)
    return SelfMap.black_box(lambda z: gamma(fw, B(z)) / gamma(w, z), name="delta_w")


def test_beta_exact_automorphism(gamma_half):
    """γ_{1/2} 在 σ = 1：β = 3，τ = 1"""
    dil = beta_exact(gamma_half, 1.0)
    assert dil.beta == pytest.approx(3.0)
    assert dil.tau is not None
    assert dil.tau.value == pytest.approx(1.0)
    assert dil.is_exact
    assert dil.is_finite


def test_beta_exact_monomial_everywhere(z2, rng):
    """z² 在单位圆周上处处 β = 2"""
    for s in sample_circle(rng, 10):
        assert beta_exact(z2, complex(s)).beta == pytest.approx(2.0)


def test_beta_exact_infinite_off_boundary_values():
    """|f(σ)| < 1 时 β = +∞"""
    f = SelfMap.from_rational(HALF_Z, "half")
    dil = beta_exact(f, 1.0)
    assert math.isinf(dil.beta)
    assert dil.tau is None
    assert not dil.is_finite


def test_beta_exact_rejects_black_box():
    bb = SelfMap.black_box(lambda z: z * z, name="bb")
    with pytest.raises(EngineError) as exc_info:
        beta_exact(bb, 1.0)
    assert exc_info.value.code == INVALID_POINT


def test_beta_radial_square():
    """黑盒 z²：径向商 1 + r，外推得到 2"""
    bb = SelfMap.black_box(lambda z: z * z, name="bb")
    dil = beta_radial(bb, 1j)
    assert dil.method is DilationMethod.RADIAL
    assert dil.beta == pytest.approx(2.0, abs=1e-8)
    assert dil.tau is not None
    assert dil.tau.value == pytest.approx(-1.0, abs=1e-6)
    assert dilation_for(bb, 1j).method is DilationMethod.RADIAL


def test_beta_radial_exponential():
    """exp(c(z-1)) 在 σ = 1 处 β = c"""
    c = 1.7
    bb = SelfMap.black_box(lambda z: cmath.exp(c * (z - 1.0)), name="exp-shift")
    assert beta_radial(bb, 1.0).beta == pytest.approx(c, rel=1e-6)


def test_beta_radial_matches_exact(random_blaschke, rng):
    """100 个随机 (B, σ)：径向外推与 |B′(σ)| 的相对误差 <= 1e-6"""
    worst = 0.0
    for _ in range(100):
        B = random_blaschke(int(rng.integers(1, 7)))
        sigma = complex(sample_circle(rng, 1)[0])
        exact = beta_exact(B, sigma).beta
        bb = SelfMap.black_box(B, name="bb")
        worst = max(worst, abs(beta_radial(bb, sigma).beta - exact) / exact)
    assert worst <= 1e-6


def test_beta_radial_zero_near_boundary():
    """零点 0.9σ 时径向商 19/(1 + 9(1-r)) 变化剧烈，外推仍得到 β = 19"""
    B = BlaschkeProduct(0.0, (0.9 + 0j,))
    dil = beta_radial(SelfMap.black_box(B, name="bb"), 1.0)
    assert dil.beta == pytest.approx(19.0, rel=1e-8)
    assert dil.confidence < 1e-6


def test_beta_star_matches_quotient_dilation(random_blaschke, rng):
    """100 个随机 (B, w, σ)：β*_f(σ; w) 等于黑盒 Δ_w f 在 σ 处的径向外推值"""
    worst = 0.0
    for _ in range(100):
        B = random_blaschke(int(rng.integers(2, 7)))
        f = SelfMap.from_blaschke(B)
        sigma = complex(sample_circle(rng, 1)[0])
        w = complex(sample_disk(rng, 1)[0])
        dil = beta_exact(f, sigma)
        assert dil.tau is not None
        star = beta_star(f, sigma, dil.tau.value, dil.beta, w)
        stage = _quotient_black_box(B, w)
        worst = max(worst, abs(beta_radial(stage, sigma).beta - star) / star)
        exact_stage = delta_chain(f, [w]).stages[1]
        assert star == pytest.approx(beta_exact(exact_stage, sigma).beta, rel=1e-8)
    assert worst <= 1e-5


def test_beta_radial_divergent_is_infinite():
    """常数映射的径向商按 2^m 增长，β 记为 +∞"""
    bb = SelfMap.black_box(lambda z: 0.5 + 0.0 * z, name="const")
    assert math.isinf(beta_radial(bb, 1.0).beta)


def test_richardson_radial():
    """一阶误差模型下外推精确；样本不足报 INCONCLUSIVE_LIMIT"""
    seq = [2.0 - 2.0**-m for m in range(8, 16)]
    estimate, increment = richardson_radial(seq)
    assert estimate == pytest.approx(2.0)
    assert increment == pytest.approx(0.0, abs=1e-12)
    with pytest.raises(EngineError) as exc_info:
        richardson_radial([1.0, 2.0])
    assert exc_info.value.code == INCONCLUSIVE_LIMIT


def test_boundary_dilation_requires_positive_beta():
    with pytest.raises(EngineError) as exc_info:
        BoundaryDilation(BoundaryPoint(1.0), None, 0.0, DilationMethod.EXACT)
    assert exc_info.value.code == INCONSISTENT_INPUT


def test_beta_star_square(z2):
    """β*_{z²}(1; 1/2) = β_{Δ_{1/2}z²}(1) = 1/3"""
    assert beta_star(z2, 1.0, 1.0, 2.0, 0.5) == pytest.approx(1.0 / 3.0)
    with pytest.raises(EngineError) as exc_info:
        beta_star(z2, 1.0, 1.0, 0.5, 0.5)
    assert exc_info.value.code == INCONSISTENT_INPUT


def test_beta_chain_matches_stage_dilations(random_blaschke, rng):
    """递推得到的 β 与边界值与各阶段的精确值一致"""
    f = SelfMap.from_blaschke(random_blaschke(4), "b4")
    chain = delta_chain(f, [0.2 - 0.1j, -0.3j, 0.4])
    sigma = complex(sample_circle(rng, 1)[0])
    bc = beta_chain(chain, sigma)
    assert len(bc.betas) == chain.k + 1
    assert bc.beta == pytest.approx(beta_exact(f, sigma).beta)
    for h, stage in enumerate(chain.stages):
        expected = beta_exact(stage, sigma)
        assert bc.betas[h] == pytest.approx(expected.beta, rel=1e-8)
        assert bc.boundary_values[h] == pytest.approx(stage(sigma), abs=1e-9)
    assert bc.confidence == 0.0


def test_beta_chain_requires_finite_beta():
    f = SelfMap.from_rational(HALF_Z, "half")
    chain = delta_chain(f, [0.1])
    with pytest.raises(EngineError) as exc_info:
        beta_chain(chain, 1.0)
    assert exc_info.value.code == PRECONDITION_FAILED


def test_fixed_point_condition():
    """z₀ = 0 时为 σ^k；k = 1 时为 σ"""
    s = cmath.exp(0.7j)
    assert fixed_point_condition(0j, 3, s).value == pytest.approx(s**3)
    assert fixed_point_condition(0.3 - 0.2j, 1, s).value == pytest.approx(s)
    with pytest.raises(EngineError):
        fixed_point_condition(0j, 0, s)


def test_boundary_solutions_general_target(z2):
    """z² = -1 的边界解为 ±i"""
    solutions = boundary_solutions(z2, lambda s: -np.ones_like(s))
    found = sorted((p.value for p in solutions), key=lambda v: v.imag)
    assert len(found) == 2
    assert found[0] == pytest.approx(-1j, abs=1e-9)
    assert found[1] == pytest.approx(1j, abs=1e-9)
    bb = SelfMap.black_box(lambda z: z * z, name="bb")
    with pytest.raises(EngineError) as exc_info:
        boundary_solutions(bb, lambda s: s)
    assert exc_info.value.code == PRECONDITION_FAILED


@pytest.mark.parametrize(
    ("fixture", "expected"),
    [("z3", [1.0, -1.0]), ("gamma_half", [1.0, -1.0]), ("cp_witness", [1.0])],
)
def test_boundary_fixed_points(request, fixture, expected):
    f = request.getfixturevalue(fixture)
    found = [p.value for p in boundary_fixed_points(f)]
    assert len(found) == len(expected)
    for e in expected:
        assert min(abs(v - e) for v in found) < 1e-9


def test_boundary_fixed_points_degenerate_identity():
    """恒等映射的边界解集退化"""
    identity = SelfMap.from_blaschke(BlaschkeProduct.monomial(1), "id")
    with pytest.raises(EngineError) as exc_info:
        boundary_fixed_points(identity)
    assert exc_info.value.code == PRECONDITION_FAILED


def test_multiple_fixed_point_sigmas(cp_multiple_witness):
    """z²(z+½)/(1+½z)：满足 f(σ) = σ² 的边界点仅有 σ = 1"""
    found = multiple_fixed_point_sigmas(cp_multiple_witness, 0j, 2)
    assert len(found) == 1
    assert found[0].value == pytest.approx(1.0)
    values = np.array([p.value for p in found])
    assert np.allclose(cp_multiple_witness(values), values**2)


def test_fixed_points_require_exact_map():
    bb = SelfMap.black_box(lambda z: z * z, name="bb")
    with pytest.raises(EngineError) as exc_info:
        boundary_fixed_points(bb)
    assert exc_info.value.code == PRECONDITION_FAILED
