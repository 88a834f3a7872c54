"""参数扫描单元测试"""

import pytest

from hyperjulia.core.models import SuiteConfig, SweepGrid
from hyperjulia.errors import PRECONDITION_FAILED, SPEC_VALIDATION_ERROR, EngineError
from hyperjulia.sweep.driver import grid_values, run_sweep


def test_grid_values():
    assert grid_values(SweepGrid(variable="z", start=0.0, stop=0.5, steps=3)) == pytest.approx(
        [0.0, 0.25, 0.5]
    )
    log_grid = SweepGrid(variable="r", start=0.0, stop=0.99, steps=3, spacing="log1m")
    assert grid_values(log_grid) == pytest.approx([0.0, 0.9, 0.99])
    assert grid_values(SweepGrid(variable="k", start=1, stop=3, steps=1)) == [1.0, 2.0, 3.0]


def test_radial_sweep_converges(z2):
    """z² 在 σ = 1：径向商 1 + r 单调趋于 β = 2"""
    grid = SweepGrid(variable="r", start=0.0, stop=0.999, steps=6, spacing="log1m")
    rows = run_sweep(z2, SuiteConfig(suite="julia"), grid)
    assert [r.index for r in rows] == list(range(6))
    assert all(r.holds for r in rows)
    assert all(r.rhs == pytest.approx(2.0) for r in rows)
    lhs = [r.lhs for r in rows]
    assert lhs == sorted(lhs)
    assert rows[-1].lhs == pytest.approx(1.999)


def test_ladder_sweep(z3):
    """k 扫描：阶梯项不减且不超过 β"""
    rows = run_sweep(
        z3, SuiteConfig(suite="lower-bounds"), SweepGrid(variable="k", start=0, stop=2, steps=1)
    )
    assert [r.lhs for r in rows] == pytest.approx([1.0, 2.0, 3.0])
    assert all(r.holds and r.rhs == pytest.approx(3.0) for r in rows)


def test_ladder_sweep_stops_at_termination(z3):
    """阶梯终止后的 k 不再输出"""
    rows = run_sweep(
        z3, SuiteConfig(suite="lower-bounds"), SweepGrid(variable="k", start=0, stop=5, steps=1)
    )
    assert len(rows) == 3


def test_automorphism_julia_sweep_is_tight(gamma_half):
    """自同构上 Julia 不等式处处取等"""
    grid = SweepGrid(variable="z", start=0.0, stop=0.9, steps=5)
    rows = run_sweep(gamma_half, SuiteConfig(suite="julia", seed=4), grid)
    for row in rows:
        assert row.holds
        assert row.gap == pytest.approx(0.0, abs=1e-9)


def test_w_sweep_two_point(z3):
    grid = SweepGrid(variable="w", start=0.0, stop=0.8, steps=4)
    rows = run_sweep(z3, SuiteConfig(suite="two-point", seed=1), grid)
    assert [r.value for r in rows] == pytest.approx([0.0, 0.8 / 3, 1.6 / 3, 0.8])
    assert all(r.holds for r in rows)


def test_sweep_is_deterministic(z3):
    grid = SweepGrid(variable="z", start=0.0, stop=0.9, steps=4)
    config = SuiteConfig(suite="mercer", seed=9)
    assert run_sweep(z3, config, grid) == run_sweep(z3, config, grid)


def test_unsupported_combination(z2):
    with pytest.raises(EngineError) as exc_info:
        run_sweep(
            z2,
            SuiteConfig(suite="cowen-pommerenke"),
            SweepGrid(variable="z", start=0, stop=0.5, steps=2),
        )
    assert exc_info.value.code == SPEC_VALIDATION_ERROR
    with pytest.raises(EngineError) as exc_info:
        run_sweep(z2, SuiteConfig(suite="julia"), SweepGrid(variable="k", start=0, stop=2, steps=1))
    assert exc_info.value.code == SPEC_VALIDATION_ERROR


def test_sweep_precondition(gamma_half):
    """自同构不满足两点 Julia 引理的前提"""
    with pytest.raises(EngineError) as exc_info:
        run_sweep(
            gamma_half,
            SuiteConfig(suite="two-point"),
            SweepGrid(variable="z", start=0.0, stop=0.5, steps=2),
        )
    assert exc_info.value.code == PRECONDITION_FAILED
